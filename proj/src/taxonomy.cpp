#include "ontokit/taxonomy.hpp"

#include <algorithm>
#include <numeric>

namespace ontokit {

Taxonomy Taxonomy::build(const std::set<Iri>& concepts, const SubsumptionTest& subsumedBy) {
    std::set<Iri> all = concepts;
    const Iri thing = vocab::thing();
    const Iri nothing = vocab::nothing();
    all.insert(thing);
    all.insert(nothing);

    const std::vector<Iri> names(all.begin(), all.end());
    const std::size_t n = names.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rel[i][j] = i == j || names[j] == thing || names[i] == nothing || subsumedBy(names[i], names[j]);
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rel[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (rel[k][j]) rel[i][j] = true;

    // Equivalence classes, each listed in IRI order.
    std::vector<std::size_t> classOf(n, n);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < n; ++i) {
        if (classOf[i] != n) continue;
        classes.emplace_back();
        for (std::size_t j = i; j < n; ++j) {
            if (classOf[j] == n && rel[i][j] && rel[j][i]) {
                classOf[j] = classes.size() - 1;
                classes.back().push_back(j);
            }
        }
    }

    const auto indexOf = [&](const Iri& iri) {
        return static_cast<std::size_t>(std::ranges::find(names, iri) - names.begin());
    };
    const std::size_t topClass = classOf[indexOf(thing)];
    const std::size_t bottomClass = classOf[indexOf(nothing)];

    // Top first, bottom last, the rest by smallest member (already in that order).
    std::vector<std::size_t> order;
    order.push_back(topClass);
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (c != topClass && c != bottomClass) order.push_back(c);
    if (bottomClass != topClass) order.push_back(bottomClass);

    Taxonomy t;
    const std::size_t g = order.size();
    std::vector<std::size_t> groupOfClass(classes.size());
    for (std::size_t k = 0; k < g; ++k) {
        groupOfClass[order[k]] = k;
        std::vector<Iri> members;
        for (std::size_t idx : classes[order[k]]) {
            members.push_back(names[idx]);
            t.groupOf_.emplace(names[idx], k);
        }
        t.groups_.push_back(std::move(members));
    }

    t.below_.assign(g, std::vector<bool>(g, false));
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
            t.below_[a][b] = rel[classes[order[a]].front()][classes[order[b]].front()];

    t.parents_.assign(g, {});
    t.children_.assign(g, {});
    for (std::size_t a = 0; a < g; ++a) {
        for (std::size_t b = 0; b < g; ++b) {
            if (a == b || !t.below_[a][b]) continue;
            bool direct = true;
            for (std::size_t c = 0; c < g && direct; ++c)
                if (c != a && c != b && t.below_[a][c] && t.below_[c][b]) direct = false;
            if (direct) {
                t.parents_[a].insert(b);
                t.children_[b].insert(a);
            }
        }
    }
    return t;
}

std::set<Iri> Taxonomy::concepts() const {
    std::set<Iri> out;
    for (const auto& [iri, group] : groupOf_) out.insert(iri);
    return out;
}

bool Taxonomy::subsumes(const Iri& super, const Iri& sub) const { return below_[groupOf(sub)][groupOf(super)]; }

std::set<Iri> Taxonomy::directParents(const Iri& name) const {
    std::set<Iri> out;
    for (Group p : parents(groupOf(name))) out.insert(groups_[p].begin(), groups_[p].end());
    return out;
}

std::set<Iri> Taxonomy::ancestors(const Iri& name) const {
    const Group g = groupOf(name);
    std::set<Iri> out;
    for (Group b = 0; b < groups_.size(); ++b)
        if (b != g && below_[g][b]) out.insert(groups_[b].begin(), groups_[b].end());
    return out;
}

std::set<Iri> Taxonomy::descendants(const Iri& name) const {
    const Group g = groupOf(name);
    std::set<Iri> out;
    for (Group a = 0; a < groups_.size(); ++a)
        if (a != g && below_[a][g]) out.insert(groups_[a].begin(), groups_[a].end());
    return out;
}

}  // namespace ontokit
