#pragma once

#include <memory>
#include <string>
#include <vector>

#include "monhecke/charmod.hpp"

namespace monhecke {

// Built-in named root data: A1, A2, A3, B2, G2, A1~ (affine),
// paper-example-3.11 (alias rank4-indefinite).
std::vector<std::string> named_data();
bool is_named_datum(const std::string& name);
std::shared_ptr<RootDatum> make_named_datum(const std::string& name);

// JSON document: {"gcm": [[...]], "lattice": "sc" | "ad" |
// {"roots": [[...]], "coroots": [[...]]}, "name": optional}.
std::shared_ptr<RootDatum> load_datum_file(const std::string& path);

// Name or path dispatch.
std::shared_ptr<RootDatum> resolve_datum(const std::string& name_or_path);

// Character spec grammar: "<target>:<values>" with target a 'x'-separated
// product of "Z/m" and "Z^f" factors. Values are one tuple per basis
// cocharacter: tuples separated by ';' with ','-separated slots; for a
// single-slot target, plain ','-separated scalars are accepted
// (e.g. "Z/2:1,0").
MultLocalSystem parse_char_spec(const RootDatum& datum, const std::string& spec);

// Word parsing: "1,2,1" (1-based simple reflection indices) or "e".
std::vector<int> parse_word_spec(const std::string& spec, int rank);
std::string word_spec(const std::vector<int>& word);

}  // namespace monhecke
