#pragma once

#include <optional>
#include <string>

#include "monhecke/kl.hpp"

namespace monhecke {

// Stable hash of a Coxeter matrix, printed in the cache header.
std::string coxeter_matrix_hash(const std::vector<std::vector<int>>& m);

// Format: header "klcache v1 <hash>", then one line per nonzero entry:
// x-word TAB y-word TAB exponent:coeff,... where words are comma-separated
// endosimple generator indices ("e" for the identity) and the polynomial is
// the classical entry P_{x,y}.
void write_kl_cache(const std::string& path, const CoxeterSystem& cox, const KLTable& table);

// Returns the table when the header hash matches; nullopt on hash mismatch
// (stale cache, caller recomputes). Throws CorruptCache on any parse or
// consistency failure.
std::optional<KLTable> read_kl_cache(const std::string& path, const CoxeterSystem& cox);

}  // namespace monhecke
