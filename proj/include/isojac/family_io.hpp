#ifndef ISOJAC_FAMILY_IO_HPP
#define ISOJAC_FAMILY_IO_HPP

// JSON family data files:
//
//   {
//     "id": "15",                                  (optional)
//     "n": 15,
//     "field": [ ["4", "-1", "1"] ],               steps, constant term first;
//                                                  a coefficient is a decimal
//                                                  string or a coordinate list
//     "cm": true,                                  (optional, default true)
//     "A": [ {"e1": 7, "e2": 0, "et": 0, "coeff": ["1", "0"]}, ... ],
//     "f": [ ... ],                                (optional)
//     "sign_of_g": -1,
//     "expected": {"m": "4", "kernel_template": "...", "e": 2, "nu": "d",
//                  "tau_sign": 1}                  (tau_sign optional)
//   }
//
// Unknown keys are rejected at every level.

#include "isojac/catalog.hpp"

#include <string>

namespace isojac {

FamilySpec parse_family_json(const std::string& text, const std::string& provenance = "file");
FamilySpec read_family_file(const std::string& path);

/// Serializes field, A, f, sign, n, expected and id. Output is deterministic.
std::string family_to_json(const FamilySpec& spec, int indent = 2);

}  // namespace isojac

#endif  // ISOJAC_FAMILY_IO_HPP
