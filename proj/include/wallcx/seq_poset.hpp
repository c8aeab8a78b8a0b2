#pragma once

#include "wallcx/simplicial.hpp"

#include <set>
#include <string>
#include <vector>

namespace wallcx {

/* A sequence of distinct ground elements, stored as indices. */
using Seq = std::vector<std::size_t>;

/* Set of nonempty sequences with distinct entries over a labelled ground
   set, ordered by the ordered-sublist relation. Ground labels must not
   contain '/' (it separates entries in derived vertex labels). */
struct SequencePoset {
  std::vector<std::string> ground;
  std::set<Seq> elements;

  void validate() const;
  std::string label_of(const Seq& s) const;  // entries joined with '/'
  bool contains(const Seq& s) const { return elements.count(s) > 0; }
};

/* Whether a arises from b by deleting entries, keeping the order. */
bool is_ordered_sublist(const Seq& a, const Seq& b);
bool strictly_below(const Seq& a, const Seq& b);

bool closed_under_sublists(const SequencePoset& f);
bool closed_under_permutations(const SequencePoset& f);

/* Both closures together. */
bool satisfies_chain_condition(const SequencePoset& f);

/* Smallest chain-closed poset containing the generators: all permutations
   of all nonempty subsets of each generator. */
SequencePoset closure(std::vector<std::string> ground, const std::vector<Seq>& generators);

/* Every nonempty injective sequence over the ground set, optionally capped
   in length. */
SequencePoset all_injective_sequences(std::vector<std::string> ground, std::size_t max_len = 0);

/* below(f, v) = { w : w concat v lies in f }. */
SequencePoset below(const SequencePoset& f, const Seq& v);

/* adjoin(f, n): sequences over the ground set extended by n fresh elements
   z1..zn such that the z part is exactly z1..zn in this order and deleting
   it lands in f. Concretely: all interleavings of (z1..zn) with each
   element of f. The fresh elements sit at the end of the ground list. */
SequencePoset adjoin(const SequencePoset& f, std::size_t n);

/* label_product(f, s): sequences of (element, tag) pairs whose element
   part lies in f, tags drawn freely from s. Ground order: element-major. */
SequencePoset label_product(const SequencePoset& f, const std::vector<std::string>& tags);

/* Elements strictly below and strictly above v. The order complex of the
   link of v inside the order complex of f is the join of the two order
   complexes. */
struct LinkSplit {
  SequencePoset lower, upper;
};
LinkSplit link_split(const SequencePoset& f, const Seq& v);

/* Order complex: vertices are the poset elements (labelled via label_of),
   simplices are the chains under the strict ordered-sublist order. */
SimplicialComplex order_complex(const SequencePoset& f);

}  // namespace wallcx
