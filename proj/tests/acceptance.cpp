#include <iostream>

#include "qwalk/validation.hpp"

int main() {
  const auto outcomes = qwalk::run_acceptance(qwalk::select_criteria(""), qwalk::ValidationScale::kFull, std::cout);
  return qwalk::all_passed(outcomes) ? 0 : 1;
}
