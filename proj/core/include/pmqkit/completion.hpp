#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmqkit/pair.hpp"

namespace pmqkit {

/// Words are sequences of non-unit element indices. The empty word
/// represents the unit of the completion monoid.
using Word = std::vector<int>;

/// A connected component of the norm-graded word universe under the
/// presentation relations, named by its (length, lex)-minimal member.
struct CompletionClass {
  int norm = 0;
  Word rep;
  std::uint64_t size = 0;
  std::optional<std::vector<Word>> members;
  std::uint64_t parent_digest = 0;
};

/// All one-step neighbours of `w` obtained by rewriting at position `pos`:
/// the swap (a,b) -> (b, a^b), its inverse (a,b) -> (c, a) with c^a = b,
/// the contraction (a,b) -> (ab) when ab is defined and not the unit, and
/// every expansion of the single letter w[pos] into a two-letter factorisation
/// over non-unit elements. Throws std::out_of_range for a bad position.
std::vector<Word> relation_moves(const FinitePMQ& q, const Word& w, int pos);

/// Connected component of a single word. The word may not contain the unit.
CompletionClass class_of_word(const FinitePMQ& q, const Word& w,
                              std::uint64_t budget = kDefaultStateBudget,
                              bool with_members = false);

/// Partition of all words of total norm `norm` into relation components,
/// sorted by canonical representative. Requires an augmented normed PMQ.
std::vector<CompletionClass> completion_classes(const FinitePMQ& q, int norm,
                                                std::uint64_t budget = kDefaultStateBudget,
                                                bool with_members = false);

/// Class of the concatenation of the two representatives. Norms add and the
/// class of the empty word is a two-sided unit.
CompletionClass completion_multiply(const FinitePMQ& q, const CompletionClass& x,
                                    const CompletionClass& y,
                                    std::uint64_t budget = kDefaultStateBudget);

/// Product e(a_1)...e(a_k) over the canonical representative, left to right.
int total_monodromy(const PMQGroupPair& pair, const CompletionClass& x);

/// For a complete PMQ (total product): number of relation components of the
/// universe of words of length <= cap, for each cap. Here contraction always
/// applies; a pair multiplying to the unit is deleted from the word. Each
/// count should equal the carrier size, the empty word standing for the unit.
struct CollapseReport {
  std::vector<std::uint64_t> class_count_at_cap;  // index 0 <-> cap 1
  bool collapses_to_group = false;
};

CollapseReport complete_pmq_collapse_check(const FinitePMQ& q, int length_cap,
                                           std::uint64_t budget = kDefaultStateBudget);

}  // namespace pmqkit
