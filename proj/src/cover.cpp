#include "fdtc/cover.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace fdtc {

namespace {

int generator_count(const MonodromyRep& rep) {
    return rep.branch_points + 2 * rep.base.genus;
}

// Evaluates the sheet permutation of a word in the branch and handle
// generators; negative ids act by the inverse permutation.
Permutation word_permutation(const MonodromyRep& rep, const std::vector<int>& word) {
    Permutation acc(rep.degree);
    for (int id : word) {
        const int a = id < 0 ? -id : id;
        const Permutation& g = a <= rep.branch_points
                                   ? rep.branch_perms[a - 1]
                                   : rep.handle_perms[a - rep.branch_points - 1];
        acc = acc * (id < 0 ? g.inverse() : g);
    }
    return acc;
}

} // namespace

MonodromyRep standard_cyclic(int branch_points, int degree) {
    if (branch_points < 1)
        throw BadDegreeError("need at least 1 branch point, got " +
                             std::to_string(branch_points));
    if (degree < 2)
        throw BadDegreeError("covering degree must be at least 2, got " +
                             std::to_string(degree));
    std::vector<int> all(degree);
    std::iota(all.begin(), all.end(), 0);
    const Permutation cyc = Permutation::single_cycle(degree, all);

    MonodromyRep rep;
    rep.branch_points = branch_points;
    rep.degree = degree;
    rep.branch_perms.assign(branch_points, cyc);
    rep.base.genus = 0;
    std::vector<int> boundary(branch_points);
    std::iota(boundary.begin(), boundary.end(), 1);
    rep.base.boundary_words.push_back(std::move(boundary));
    return rep;
}

void validate(const MonodromyRep& rep) {
    if (rep.branch_points < 1)
        throw InvalidCoverError("need at least 1 branch point");
    if (rep.degree < 2)
        throw BadDegreeError("covering degree must be at least 2, got " +
                             std::to_string(rep.degree));
    if (rep.base.genus < 0)
        throw InvalidCoverError("base genus cannot be negative");
    if (static_cast<int>(rep.branch_perms.size()) != rep.branch_points)
        throw InvalidCoverError("expected " + std::to_string(rep.branch_points) +
                                " branch permutations, got " +
                                std::to_string(rep.branch_perms.size()));
    if (static_cast<int>(rep.handle_perms.size()) != 2 * rep.base.genus)
        throw InvalidCoverError("expected " + std::to_string(2 * rep.base.genus) +
                                " handle permutations, got " +
                                std::to_string(rep.handle_perms.size()));
    for (const Permutation& p : rep.branch_perms)
        if (p.size() != rep.degree)
            throw InvalidCoverError("branch permutation degree mismatch");
    for (const Permutation& p : rep.handle_perms)
        if (p.size() != rep.degree)
            throw InvalidCoverError("handle permutation degree mismatch");
    if (rep.base.boundary_words.empty())
        throw InvalidCoverError("the base surface must have boundary");
    const int gens = generator_count(rep);
    for (const auto& word : rep.base.boundary_words)
        for (int id : word) {
            const int a = id < 0 ? -id : id;
            if (a < 1 || a > gens)
                throw InvalidCoverError("boundary word id " + std::to_string(id) +
                                        " outside 1.." + std::to_string(gens));
        }
}

bool is_transitive(const MonodromyRep& rep) {
    validate(rep);
    std::vector<char> seen(rep.degree, 0);
    std::queue<int> frontier;
    seen[0] = 1;
    frontier.push(0);
    int reached = 1;
    while (!frontier.empty()) {
        const int x = frontier.front();
        frontier.pop();
        auto visit = [&](int y) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                frontier.push(y);
            }
        };
        for (const Permutation& p : rep.branch_perms) visit(p(x));
        for (const Permutation& p : rep.handle_perms) visit(p(x));
    }
    return reached == rep.degree;
}

bool is_fully_ramified(const MonodromyRep& rep) {
    if (!is_transitive(rep))
        throw NotConnectedError("the covering surface is disconnected "
                                "(sheet monodromy is not transitive)");
    for (const Permutation& p : rep.branch_perms)
        if (p.has_fixed_point()) return false;
    return true;
}

CoverGeometry cover_geometry(const MonodromyRep& rep) {
    if (!is_transitive(rep))
        throw NotConnectedError("the covering surface is disconnected "
                                "(sheet monodromy is not transitive)");

    CoverGeometry geo;
    geo.total_degree = rep.degree;
    geo.base_boundary_count = static_cast<int>(rep.base.boundary_words.size());

    const int base_euler = 2 - 2 * rep.base.genus - geo.base_boundary_count;
    int branch_cycle_sum = 0;
    for (int i = 0; i < rep.branch_points; ++i) {
        const auto cycles = rep.branch_perms[i].cycles();
        BranchPreimage pre;
        pre.branch_point = i;
        pre.preimage_count = static_cast<int>(cycles.size());
        for (const auto& c : cycles) pre.ramification.push_back(static_cast<int>(c.size()));
        std::sort(pre.ramification.begin(), pre.ramification.end());
        branch_cycle_sum += pre.preimage_count;
        geo.branch_preimages.push_back(std::move(pre));
    }
    geo.euler_char = rep.degree * (base_euler - rep.branch_points) + branch_cycle_sum;

    int total_components = 0;
    for (int b = 0; b < geo.base_boundary_count; ++b) {
        const Permutation p = word_permutation(rep, rep.base.boundary_words[b]);
        int comp = 0;
        for (auto& cyc : p.cycles()) {
            BoundaryComponent bc;
            bc.base_boundary = b;
            bc.component = comp++;
            bc.degree = static_cast<int>(cyc.size());
            std::sort(cyc.begin(), cyc.end());
            bc.sheets = std::move(cyc);
            geo.boundaries.push_back(std::move(bc));
        }
        total_components += comp;
    }

    const int two_genus = 2 - geo.euler_char - total_components;
    if (two_genus < 0 || two_genus % 2 != 0)
        throw InvalidCoverError(
            "boundary words are inconsistent with an orientable cover "
            "(euler characteristic " + std::to_string(geo.euler_char) + " with " +
            std::to_string(total_components) + " boundary components)");
    geo.genus = two_genus / 2;
    return geo;
}

std::pair<int, int> boundary_connectivity(int branch_points, int degree) {
    if (branch_points < 1)
        throw BadDegreeError("need at least 1 branch point, got " +
                             std::to_string(branch_points));
    if (degree < 2)
        throw BadDegreeError("covering degree must be at least 2, got " +
                             std::to_string(degree));
    const int g = std::gcd(branch_points, degree);
    return {g, degree / g};
}

} // namespace fdtc
