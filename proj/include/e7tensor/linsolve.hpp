#pragma once

#include <vector>

#include "e7tensor/field.hpp"

namespace e7tensor {

enum class SolveStatus { Ok, RankDeficient, Inconsistent };

struct ExactSolveResult {
  SolveStatus status = SolveStatus::Ok;
  std::vector<Rational> x;  // valid when status == Ok
};

// Solves the (possibly overdetermined) exact system A x = b by Gaussian
// elimination over Q. Ok requires full column rank and every equation
// satisfied; no tolerances anywhere.
ExactSolveResult solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace e7tensor
