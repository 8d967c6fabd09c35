#pragma once

#include <map>
#include <optional>
#include <string>

#include "retrieval/code_model.hpp"
#include "retrieval/expectation.hpp"

namespace retrieval {

/// Identity code I_k over GF(2).
CodeSpec make_identity(std::size_t k, std::size_t s1);

/// Systematic [I_s | P] MDS generator over GF(q): Vandermonde on the
/// evaluation points 0..m-1, row-reduced. Every s columns are independent;
/// verified exhaustively for m <= 14 and by random spot checks above.
/// Throws FieldTooSmallError when m > q.
Mat make_mds_generator(std::size_t s, std::size_t m, std::uint64_t q);

/// Block-diagonal file-dedicated MDS code; both blocks share the smallest
/// prime field >= max(n1, n2, 2).
CodeSpec make_dedicated(std::size_t n1, std::size_t n2, std::size_t s1,
                        std::size_t s2);

/// Systematic [n,k] MDS code over the smallest prime >= n.
CodeSpec make_global_mds(std::size_t n, std::size_t k, std::size_t s1);

/// Cycle code over GF(2): columns e_1..e_k followed by e_i + e_{i+1 mod k},
/// n = 2k. Requires k >= 3.
CodeSpec make_hybrid_cycle(std::size_t k, std::size_t s1);

/// Horizontal concatenation of m copies; retrieval statistics are unchanged.
CodeSpec repeat_code(const CodeSpec& code, std::size_t m);

/// Concatenation of two codes with identical k, field and partition.
CodeSpec concat_codes(const CodeSpec& a, const CodeSpec& b);

/// Construction tag carried in matrix files ("# family: name key=value ...").
struct FamilyTag {
    std::string family;
    std::map<std::string, std::uint64_t> params;
};

std::string format_family_tag(const FamilyTag& tag);
std::optional<FamilyTag> parse_family_tag(const std::string& text);

/// Family tags matching the constructors above.
FamilyTag identity_tag(std::size_t k, std::size_t s1);
FamilyTag dedicated_tag(std::size_t n1, std::size_t n2, std::size_t s1,
                        std::size_t s2);
FamilyTag global_mds_tag(std::size_t n, std::size_t k, std::size_t s1);
FamilyTag hybrid_cycle_tag(std::size_t k, std::size_t s1);

/// Closed-form (E1, E2) for a tagged construction, when one applies to the
/// requested partition. Empty when the tag has no closed form (hybrid) or the
/// partition disagrees with a dedicated tag's block split.
std::optional<RetrievalPair> closed_pair_from_tag(const FamilyTag& tag,
                                                  std::size_t k,
                                                  std::size_t s1);

}  // namespace retrieval
