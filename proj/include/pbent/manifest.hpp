#pragma once

// Recipe manifests (JSON) for the builders.
//
//   {
//     "p": 3, "m": 2, "t": 1,
//     "modulus_m": "2,2,1",            // optional, least irreducible by default
//     "modulus_t": "...",              // optional, h's field when t != m
//     "pi": [[1,0],[0,1]],             // optional; else random from "seed"; else identity
//     "seed": 7,                       // optional
//     "G": {"form": "ypix", "g": [...]},  // optional; MM function, g a table on GF(p^m)
//     "U": [3, 1],                     // pair-space indices, or
//     "alphas": [1],                   // u_i = (alpha_i, 0)
//     "h": {"kind": "table"|"poly"|"random"|"zero", "data": ..., "combiner": [...]},
//     "embedding": "field"|"tuple",
//     "family": "shifted"|"plateaued",     // aliases: construction1, theorem3, theorem4
//     "h_list": [[...], ...]           // plateaued: tables on Z_p^t
//   }

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbent/construct.hpp"

namespace pbent {

enum class Family { Shifted, Plateaued };

struct Recipe {
  Family family = Family::Shifted;
  std::uint64_t seed = 0;
  Field field_m;
  LinearPermutation pi;
  MMForm form = MMForm::YPiX;
  std::optional<VPFunc> g;
  std::vector<Index> U;              // pair-space indices
  std::vector<FieldElem> alphas;     // set when given as alphas
  std::optional<HFunction> h;        // construction1
  std::vector<PFunc> h_list;         // theorem4
};

/// ParseError for malformed or inconsistent manifests.
Recipe parse_recipe(const nlohmann::json& manifest);
Recipe parse_recipe_text(const std::string& text);
/// Only the G part (p, m, modulus_m, pi, seed, G, family); U and h are ignored.
Recipe parse_g_recipe(const nlohmann::json& manifest);
Recipe parse_g_recipe_text(const std::string& text);

/// The MM function G of the recipe.
VPFunc recipe_G(const Recipe& recipe);

BuildResult build_recipe(const Recipe& recipe, bool verify = true);

}  // namespace pbent
