#ifndef FLAGPAR_SUITE_HPP
#define FLAGPAR_SUITE_HPP

// The verification batteries: each compares a library answer with a brute
// force or classical oracle on finite windows. Randomized batteries use fixed
// seeds.

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace flagpar {

struct Battery {
  int id = 0;
  std::string suite;   // oracle, classification, realforms or induction
  std::string name;
  std::string anchor;
  double budget_seconds = 0;
  std::function<std::pair<bool, std::string>()> run;
};

const std::vector<Battery>& batteries();

namespace battery {

std::pair<bool, std::string> stabilizer_oracle();
std::pair<bool, std::string> gl4_parabolic_count();
std::pair<bool, std::string> rational_borel();
std::pair<bool, std::string> so6_trichotomy();
std::pair<bool, std::string> jordan_oracle();
std::pair<bool, std::string> levi_round_trip();
std::pair<bool, std::string> man_certificates();
std::pair<bool, std::string> dagger_certificates();
std::pair<bool, std::string> induction_fidelity();
std::pair<bool, std::string> character_utilities();

}  // namespace battery

}  // namespace flagpar

#endif  // FLAGPAR_SUITE_HPP
