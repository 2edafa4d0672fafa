#pragma once

#include <string>

#include "steenrod/serre_cartan.hpp"

namespace steenrod {

// Persistent text cache of Adem expansions. Format:
//
//   ADEMCACHE 1
//   a b : k1 l1 ; k2 l2 ; ...
//
// one record per inadmissible pair sorted by (a, b); l = 0 means a single
// factor Sq^k; an empty right-hand side is the zero expansion. The cache is
// an optimization only: a corrupt or version-mismatched file is ignored (the
// returned warning says why) and will be rewritten.
struct AdemCacheLoad {
    bool loaded = false;
    std::size_t entries = 0;
    std::string warning;
};

AdemCacheLoad load_adem_cache(const std::string& path);

// Writes every expansion with a + b <= degree_cap. Returns false and fills
// `error` on I/O failure.
bool save_adem_cache(const std::string& path, int degree_cap, std::string* error);

}  // namespace steenrod
