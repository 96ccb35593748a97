#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hallmark/group.hpp"

namespace hallmark {

PermutationGroup symmetric(unsigned n);
PermutationGroup alternating(unsigned n);
PermutationGroup cyclic(unsigned n);

/// Symmetries of the n-gon, order 2n. Requires n >= 3.
PermutationGroup dihedral(unsigned n);

/// PSL(2,q) on the q+1 points of the projective line. Point q is infinity.
PermutationGroup psl2(unsigned q);

/// AGammaL(1, q^p) acting on GF(q^p); order q^p (q^p - 1) p.
PermutationGroup semiAffine(unsigned q, unsigned p);

/// C_n x| C_k acting on Z_n through the least unit of multiplicative order k.
PermutationGroup frobenius(unsigned n, unsigned k);

/// Acts on the disjoint union; H's points follow G's.
PermutationGroup directProduct(const PermutationGroup& g, const PermutationGroup& h);

/// Groups shipped as generator files.
PermutationGroup psl3_2();
PermutationGroup psl3_3();
PermutationGroup j1();

/// Loads an embedded generator file by stem, e.g. "psl3_3".
PermutationGroup shippedGroup(const std::string& stem);

struct CatalogEntry {
  std::string name;
  std::function<PermutationGroup()> builder;
  BigInt expectedOrder;
  std::set<std::string> tags;  // simple, solvable, p-solvable, sporadic-stretch

  /// Entries tagged sporadic-stretch are only run with --extended.
  bool extended() const { return tags.contains("sporadic-stretch"); }
};

/// The default catalog in a fixed order. Immutable after first use.
const std::vector<CatalogEntry>& defaultCatalog();

std::optional<CatalogEntry> findCatalogEntry(const std::string& name);

/// Builds a group by catalog name. Besides the registered names this accepts
/// the parametric forms sym_N, alt_N, cyclic_N, dihedral_N, psl2_Q,
/// semiaffine_Q_P and frobenius_N_K. Throws MalformedInput for unknown names.
PermutationGroup catalogGroup(const std::string& name);

}  // namespace hallmark
