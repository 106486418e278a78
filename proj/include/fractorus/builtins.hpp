#pragma once
//
// Built-in field families, so every CLI report is reproducible without data
// files.  Accepted names:
//
//   const                     f ≡ 1
//   cos<k>x                   cos(k·x₁), integer 1 ≤ k ≤ m/2 − 1 (e.g. cos2x;
//                             "cosx" is accepted for k = 1)
//   cos_x1_cos_x2             cos x₁ · cos x₂            (dim >= 2)
//   cos_x1_cos_x2_cos_x3      cos x₁ · cos x₂ · cos x₃   (dim = 3)
//   gauss:<w>                 periodized Gaussian of width w ∈ (0,3],
//                             peak-normalized to 1 at the origin
//
#include <string>
#include <vector>

#include "fractorus/fields.hpp"

namespace fractorus {

bool is_builtin_name(const std::string& name);
GridField builtin_field(const std::string& name, const GridSpec& spec);
std::vector<std::string> builtin_examples();

} // namespace fractorus
