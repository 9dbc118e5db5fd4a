#ifndef MODSUB_ENUMERATOR_HPP
#define MODSUB_ENUMERATOR_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "modsub/canonical.hpp"
#include "modsub/coset_pair.hpp"

namespace modsub {

/// Which family of subgroups to enumerate.
struct SearchFilter {
  bool torsion_free = true;
  std::optional<std::uint32_t> genus;
  /// When present its widths must sum to the target index.
  std::optional<CuspSplit> cusp_split;

  bool accepts(const CosetPair& pair) const;
};

/// A subgroup of finite index, i.e. a pair up to conjugation fixing point 0,
/// stored in its canonical labeling from base 0.
struct RootedClass {
  CosetPair pair;
  CanonicalKey key;
};

/// A conjugacy class of subgroups.
struct ConjClass {
  /// The pair in its minimal-key labeling.
  CosetPair representative;
  CanonicalKey canonical_key;
  std::uint32_t aut_order = 1;
  bool chiral = false;
  /// Rooted classes from the input stream that fell into this class.
  std::uint64_t members = 0;
};

struct SearchOptions {
  /// Worker count; 0 means the OpenMP default.
  int jobs = 0;
  /// Number of branching decisions taken before the tree is cut into tasks.
  std::uint32_t split_depth = 6;
};

using RootedVisitor = std::function<void(const RootedClass&)>;

/// Serial reference search. Calls `visit` once per rooted class in search
/// order (deterministic, not sorted).
void visit_rooted_serial(std::size_t mu, const SearchFilter& filter, const RootedVisitor& visit);

/// Serial reference; result sorted by key.
std::vector<RootedClass> enumerate_rooted_serial(std::size_t mu, const SearchFilter& filter);

/// Parallel search over a fixed-depth partition of the tree; result sorted by
/// key and identical to enumerate_rooted_serial for any worker count.
std::vector<RootedClass> enumerate_rooted(std::size_t mu, const SearchFilter& filter,
                                          const SearchOptions& options = {});

/// Counts without materializing the classes.
std::uint64_t count_rooted(std::size_t mu, const SearchFilter& filter, const SearchOptions& options = {});

/// Counts conjugacy classes without materializing them: each class has
/// exactly one rooted member whose own labeling is its minimal key.
std::uint64_t count_classes(std::size_t mu, const SearchFilter& filter, const SearchOptions& options = {});

/// Groups rooted classes by their minimal key over all bases. Output sorted by
/// canonical_key. The input is expected to come from one (mu, filter) run.
std::vector<ConjClass> conjugacy_reduce_serial(std::span<const RootedClass> rooted);
std::vector<ConjClass> conjugacy_reduce(std::span<const RootedClass> rooted, const SearchOptions& options = {});

/// Number of subgroups in the class: mu / aut_order.
std::uint64_t class_size(const ConjClass& c);

}  // namespace modsub

#endif  // MODSUB_ENUMERATOR_HPP
