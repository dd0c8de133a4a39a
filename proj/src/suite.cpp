#include "flagpar/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "flagpar/scenario.hpp"

namespace flagpar {

const std::vector<Battery>& batteries() {
  using namespace battery;
  static const std::vector<Battery> all{
      {1, "oracle", "stabilizer-oracle", "flag stabilizer membership equals the truncated linear solve", 60,
       stabilizer_oracle},
      {2, "classification", "gl4-parabolic-count", "parabolics of gl(4) containing the Borel", 10, gl4_parabolic_count},
      {3, "classification", "rational-borel", "Borel of the rational cut flag is solvable and traceless", 30,
       rational_borel},
      {4, "classification", "so6-trichotomy", "three self-taut flags share one stabilizer in so(6)", 120,
       so6_trichotomy},
      {5, "oracle", "jordan-chevalley", "Jordan decomposition against a splitting-field construction", 60,
       jordan_oracle},
      {6, "classification", "levi-round-trip", "Levi data survive the maximal taut couple", 60, levi_round_trip},
      {7, "realforms", "man-certificates", "p = m + a + n with restricted root dimensions", 120, man_certificates},
      {8, "realforms", "dagger-certificates", "p-dagger keeps m and a", 120, dagger_certificates},
      {9, "induction", "induction-fidelity", "induced modules respect brackets and the ad-twist", 120,
       induction_fidelity},
      {10, "induction", "character-utilities", "psi_B determinant and Voiculescu minors", 10, character_utilities},
  };
  return all;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle", "classification", "realforms", "induction", "all"};
  return names;
}

Report run_suite(const std::string& name) {
  bool known = false;
  for (const auto& n : suite_names()) known = known || n == name;
  if (!known) throw Error("unknown suite '" + name + "'");
  std::vector<const Battery*> chosen;
  for (const auto& b : batteries())
    if (name == "all" || b.suite == name) chosen.push_back(&b);
  std::vector<Report> parts(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) run_check(parts[i], chosen[i]->name, chosen[i]->anchor, 0, chosen[i]->run);
  };
  std::size_t width = 1;
  if (const char* env = std::getenv("FLAGPAR_JOBS")) width = std::max<long>(1, std::strtol(env, nullptr, 10));
  width = std::min(width, chosen.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Report r;
  r.source = "suite:" + name;
  for (auto& part : parts) r.records.insert(r.records.end(), part.records.begin(), part.records.end());
  return r;
}

}  // namespace flagpar
