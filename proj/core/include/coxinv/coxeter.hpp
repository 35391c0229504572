#pragma once
// Reflection groups of Coxeter types H3 and H4 in their standard degree-3/4
// orthogonal representations over Q(sqrt5), together with the Galois-twisted
// ("star") representations obtained by conjugating every matrix entry.

#include "coxinv/matrix.hpp"
#include "coxinv/poly.hpp"

#include <string>
#include <vector>

namespace coxinv {

enum class GroupType { H3, H4 };

inline int group_rank(GroupType t) { return t == GroupType::H3 ? 3 : 4; }
inline const char* group_name(GroupType t) { return t == GroupType::H3 ? "h3" : "h4"; }

// Generating reflections sigma(s_1..s_rank); star applies the field
// automorphism entrywise.
std::vector<Mat> group_generators(GroupType type, bool star = false);

// Coxeter matrix: order of s_i s_j (1 on the diagonal).
std::vector<std::vector<int>> coxeter_orders(GroupType type);

// Verify s_i^2 = 1 and (s_i s_j)^{m_ij} = 1 for all pairs; on failure report
// the first violated relation in *failure.
bool check_relations(const std::vector<Mat>& gens, GroupType type,
                     std::string* failure = nullptr);

// Closure under multiplication, breadth-first from the identity; throws
// std::runtime_error if more than `cap` distinct elements appear.
std::vector<Mat> enumerate_group(const std::vector<Mat>& gens, std::size_t cap = 20000);

// Elements M != I with M^2 = I and rank(M - I) = 1.
std::vector<Mat> reflections_in(const std::vector<Mat>& elements);

// Coefficient vector of the reflecting hyperplane's linear form: any nonzero
// row of M - I, normalized so the first nonzero coefficient is 1.  Satisfies
// root * M = -root.
std::vector<Golden> reflection_root(const Mat& m);

// The root as a linear polynomial over the given ring.
Poly root_form(const std::vector<Golden>& root, const RingPtr& ring);

// Normalize a linear form so its first nonzero coefficient is 1 (comparison
// up to scalar).
Poly normalize_form(const Poly& form);

// Apply a group element to a polynomial: u -> u * M on row coordinate
// vectors, i.e. variable k is replaced by sum_i M[i][k] u_i.
Poly act(const Poly& p, const Mat& m);

// Product of generators for a word given by 0-based generator indices.
Mat word_matrix(const std::vector<Mat>& gens, const std::vector<int>& word);

}  // namespace coxinv
