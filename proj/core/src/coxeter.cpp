#include "coxinv/coxeter.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace coxinv {

namespace {

// Degree-3 generating reflections.  With a = (1+sqrt5)/2 and a' = (1-sqrt5)/2:
// s1 = diag(-1,1,1), s3 = diag(1,1,-1), and s2 = (1/2) [[a',1,-a],
// [1,a,-a'],[-a,-a',1]] (symmetric, orthogonal, involutive).
std::vector<Mat> gens3() {
    const Golden a = Golden::ratio(), ab = Golden::ratio_conj();
    const Golden h = Golden(rat_frac(1, 2));
    Mat s1 = Mat::identity(3);
    s1.at(0, 0) = Golden(-1);
    Mat s3 = Mat::identity(3);
    s3.at(2, 2) = Golden(-1);
    Mat s2(3);
    s2.at(0, 0) = h * ab;
    s2.at(0, 1) = h;
    s2.at(0, 2) = -(h * a);
    s2.at(1, 0) = h;
    s2.at(1, 1) = h * a;
    s2.at(1, 2) = -(h * ab);
    s2.at(2, 0) = -(h * a);
    s2.at(2, 1) = -(h * ab);
    s2.at(2, 2) = h;
    return {s1, s2, s3};
}

// Degree-4: the degree-3 generators fixing the last coordinate, plus the
// reflection in the root -(1/2)(a e2 + e3 + a' e4).  The resulting matrix is
// symmetric with +a'/2 in position (2,2); it squares to the identity (the
// sign variant with -a'/2 there does not).
Mat gen4_extra() {
    const Golden a = Golden::ratio(), ab = Golden::ratio_conj();
    const Golden h = Golden(rat_frac(1, 2));
    Mat s4(4);
    s4.at(0, 0) = Golden(1);
    s4.at(1, 1) = h * ab;
    s4.at(1, 2) = -(h * a);
    s4.at(1, 3) = h;
    s4.at(2, 1) = -(h * a);
    s4.at(2, 2) = h;
    s4.at(2, 3) = -(h * ab);
    s4.at(3, 1) = h;
    s4.at(3, 2) = -(h * ab);
    s4.at(3, 3) = h * a;
    return s4;
}

}  // namespace

std::vector<Mat> group_generators(GroupType type, bool star) {
    std::vector<Mat> gens;
    if (type == GroupType::H3) {
        gens = gens3();
    } else {
        for (const Mat& g3 : gens3()) {
            Mat g(4);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) g.at(i, j) = g3.at(i, j);
            g.at(3, 3) = Golden(1);
            gens.push_back(g);
        }
        gens.push_back(gen4_extra());
    }
    if (star)
        for (auto& g : gens) g = g.conj();
    return gens;
}

std::vector<std::vector<int>> coxeter_orders(GroupType type) {
    if (type == GroupType::H3) return {{1, 5, 2}, {5, 1, 3}, {2, 3, 1}};
    return {{1, 5, 2, 2}, {5, 1, 3, 2}, {2, 3, 1, 3}, {2, 2, 3, 1}};
}

bool check_relations(const std::vector<Mat>& gens, GroupType type,
                     std::string* failure) {
    auto orders = coxeter_orders(type);
    const int n = static_cast<int>(gens.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Mat prod = gens[i] * gens[j];
            Mat acc = Mat::identity(prod.dim());
            int m = orders[i][j];
            for (int k = 0; k < m; ++k) acc = acc * prod;
            if (!acc.is_identity()) {
                if (failure)
                    *failure = "(s" + std::to_string(i + 1) + "*s" +
                               std::to_string(j + 1) + ")^" + std::to_string(m) +
                               " != 1";
                return false;
            }
        }
    return true;
}

std::vector<Mat> enumerate_group(const std::vector<Mat>& gens, std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    std::vector<Mat> elements;
    std::unordered_set<std::string> seen;
    std::deque<std::size_t> frontier;
    elements.push_back(Mat::identity(gens[0].dim()));
    seen.insert(elements[0].key());
    frontier.push_back(0);
    while (!frontier.empty()) {
        std::size_t idx = frontier.front();
        frontier.pop_front();
        for (const Mat& g : gens) {
            Mat next = elements[idx] * g;
            std::string k = next.key();
            if (seen.count(k)) continue;
            if (elements.size() >= cap)
                throw std::runtime_error("group enumeration exceeded safety cap");
            seen.insert(std::move(k));
            elements.push_back(next);
            frontier.push_back(elements.size() - 1);
        }
    }
    return elements;
}

std::vector<Mat> reflections_in(const std::vector<Mat>& elements) {
    std::vector<Mat> out;
    for (const Mat& m : elements) {
        if (m.is_identity()) continue;
        if (!(m * m).is_identity()) continue;
        if ((m - Mat::identity(m.dim())).rank() != 1) continue;
        out.push_back(m);
    }
    return out;
}

std::vector<Golden> reflection_root(const Mat& m) {
    Mat d = m - Mat::identity(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        int first = -1;
        for (int j = 0; j < m.dim(); ++j)
            if (!d.at(i, j).is_zero()) {
                first = j;
                break;
            }
        if (first < 0) continue;
        Golden inv = d.at(i, first).inv();
        std::vector<Golden> root;
        root.reserve(m.dim());
        for (int j = 0; j < m.dim(); ++j) root.push_back(d.at(i, j) * inv);
        // sanity: the root is antisymmetric under the reflection
        std::vector<Golden> img = m.apply_row(root);
        for (int j = 0; j < m.dim(); ++j)
            if (!(img[j] == -root[j]))
                throw std::logic_error("row of M - I is not a reflection root");
        return root;
    }
    throw std::invalid_argument("matrix is the identity; no root");
}

Poly root_form(const std::vector<Golden>& root, const RingPtr& ring) {
    if (root.size() != ring->size())
        throw std::invalid_argument("root arity does not match ring");
    Poly p(ring);
    for (std::size_t i = 0; i < root.size(); ++i)
        if (!root[i].is_zero())
            p += Poly::variable(ring, static_cast<int>(i), root[i]);
    return p;
}

Poly normalize_form(const Poly& form) {
    for (std::size_t i = 0; i < form.nvars(); ++i) {
        std::vector<int> e(form.nvars(), 0);
        e[i] = 1;
        Golden c = form.coeff(e);
        if (!c.is_zero()) return form.scaled(c.inv());
    }
    return form;
}

Poly act(const Poly& p, const Mat& m) {
    const RingPtr& ring = p.ring();
    if (static_cast<int>(ring->size()) != m.dim())
        throw std::invalid_argument("matrix dimension does not match ring");
    std::vector<Poly> images;
    images.reserve(ring->size());
    for (int k = 0; k < m.dim(); ++k) {
        Poly im(ring);
        for (int i = 0; i < m.dim(); ++i)
            if (!m.at(i, k).is_zero()) im += Poly::variable(ring, i, m.at(i, k));
        images.push_back(std::move(im));
    }
    return p.substitute(images);
}

Mat word_matrix(const std::vector<Mat>& gens, const std::vector<int>& word) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    Mat m = Mat::identity(gens[0].dim());
    for (int g : word) m = m * gens.at(static_cast<std::size_t>(g));
    return m;
}

}  // namespace coxinv
