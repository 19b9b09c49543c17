#ifndef RANDDAG_TABLE_IO_HPP
#define RANDDAG_TABLE_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "randdag/counting.hpp"

namespace randdag {

// Versioned line-oriented cache format.  Header:
//   randdag-table v1 kind=<doag|gamma|source> policy=<spec> maxN=<int> maxM=<int>
// then one line per nonzero entry, sorted lexicographically on the index
// tuple: `n m k <count>` for doag, `a b <count>` for gamma, `n k <count>`
// for source tables.

struct CacheHeader {
  std::string kind;
  std::string policy;
  int max_n = 0;
  int max_m = 0;
};

CacheHeader read_cache_header(std::istream& in);

void write_doag_table_cache(std::ostream& out, const DoagCountTable& table);
DoagCountTable read_doag_table_cache(std::istream& in);

void write_source_table_cache(std::ostream& out, const SourceCountTable& table);
SourceCountTable read_source_table_cache(std::istream& in);

// gamma caches use maxN/maxM for the a/b bounds of the filled rectangle.
void write_gamma_table_cache(std::ostream& out, const GammaTable& table);
GammaTable read_gamma_table_cache(std::istream& in);

/// Loads a cached table if the file exists and its header matches the
/// request exactly; nullopt when the file is missing or the header differs.
/// Throws CacheError on malformed content.
std::optional<DoagCountTable> try_load_doag_table(const std::string& path,
                                                  const DegreePolicy& policy,
                                                  int max_n, int max_m);

/// Writes the table to `path` (best effort; throws CacheError on IO failure).
void store_doag_table(const std::string& path, const DoagCountTable& table);

}  // namespace randdag

#endif
