#include "tableau.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <iterator>

namespace ontokit {
namespace detail {
namespace {

using Id = std::uint32_t;

enum class Op : std::uint8_t { Top, Bottom, Atom, NegAtom, And, Or, Some, All };

struct Expr {
    Op op;
    Id ref = 0;  // atom id for Atom/NegAtom, role id for Some/All
    std::vector<Id> args;

    friend auto operator<=>(const Expr&, const Expr&) = default;
};

constexpr Id kTop = 0;
constexpr Id kBottom = 1;

// Hash-consed NNF expressions. Role ids are 2k for the k-th role name and
// 2k+1 for its inverse.
class Pool {
public:
    Pool() {
        intern({Op::Top, 0, {}});
        intern({Op::Bottom, 0, {}});
    }

    const Expr& at(Id id) const { return exprs_[id]; }
    std::size_t size() const { return exprs_.size(); }

    Id atom(const Iri& name) {
        auto [it, fresh] = atoms_.try_emplace(name, static_cast<Id>(atomNames_.size()));
        if (fresh) atomNames_.push_back(name);
        return intern({Op::Atom, it->second, {}});
    }

    Id role(const Role& r) {
        auto [it, fresh] = roleNames_.try_emplace(r.name, static_cast<Id>(roleList_.size()));
        if (fresh) roleList_.push_back(r.name);
        return 2 * it->second + (r.inverse ? 1 : 0);
    }

    Role roleOf(Id id) const { return Role{roleList_[id / 2], (id & 1) != 0}; }
    std::size_t roleCount() const { return 2 * roleList_.size(); }
    std::size_t atomCount() const { return atomNames_.size(); }
    const Iri& atomName(Id atom) const { return atomNames_[atom]; }

    Id conj(std::vector<Id> ops) { return nary(Op::And, std::move(ops)); }
    Id disj(std::vector<Id> ops) { return nary(Op::Or, std::move(ops)); }

    Id some(Id role, Id filler) { return filler == kBottom ? kBottom : intern({Op::Some, role, {filler}}); }
    Id all(Id role, Id filler) { return filler == kTop ? kTop : intern({Op::All, role, {filler}}); }

    /// `c` must be in NNF.
    Id build(const Concept& c) {
        using K = Concept::Kind;
        std::vector<Id> ops;
        switch (c.kind()) {
            case K::Named: return atom(c.iri());
            case K::Top: return kTop;
            case K::Bottom: return kBottom;
            case K::Complement: return negate(build(c.filler()));
            case K::Intersection:
            case K::Union:
                for (const auto& op : c.operands()) ops.push_back(build(op));
                return c.kind() == K::Intersection ? conj(std::move(ops)) : disj(std::move(ops));
            case K::Existential: return some(role(c.role()), build(c.filler()));
            case K::Universal: return all(role(c.role()), build(c.filler()));
        }
        return kTop;
    }

    Id negate(Id id) {
        if (auto it = negation_.find(id); it != negation_.end()) return it->second;
        const Expr e = exprs_[id];
        Id out = kTop;
        std::vector<Id> ops;
        switch (e.op) {
            case Op::Top: out = kBottom; break;
            case Op::Bottom: out = kTop; break;
            case Op::Atom: out = intern({Op::NegAtom, e.ref, {}}); break;
            case Op::NegAtom: out = intern({Op::Atom, e.ref, {}}); break;
            case Op::And:
            case Op::Or:
                for (Id a : e.args) ops.push_back(negate(a));
                out = e.op == Op::And ? disj(std::move(ops)) : conj(std::move(ops));
                break;
            case Op::Some: out = all(e.ref, negate(e.args[0])); break;
            case Op::All: out = some(e.ref, negate(e.args[0])); break;
        }
        negation_[id] = out;
        negation_[out] = id;
        return out;
    }

    Concept toConcept(Id id) const {
        const Expr& e = exprs_[id];
        std::vector<Concept> ops;
        switch (e.op) {
            case Op::Top: return Concept::top();
            case Op::Bottom: return Concept::bottom();
            case Op::Atom: return Concept::named(atomNames_[e.ref]);
            case Op::NegAtom: return Concept::complement(Concept::named(atomNames_[e.ref]));
            case Op::And:
            case Op::Or:
                for (Id a : e.args) ops.push_back(toConcept(a));
                return e.op == Op::And ? Concept::intersection(std::move(ops)) : Concept::unionOf(std::move(ops));
            case Op::Some: return Concept::some(roleOf(e.ref), toConcept(e.args[0]));
            case Op::All: return Concept::all(roleOf(e.ref), toConcept(e.args[0]));
        }
        return Concept::top();
    }

private:
    Id intern(Expr e) {
        auto [it, fresh] = index_.try_emplace(e, static_cast<Id>(exprs_.size()));
        if (fresh) exprs_.push_back(std::move(e));
        return it->second;
    }

    Id nary(Op op, std::vector<Id> ops) {
        const Id absorbing = op == Op::And ? kBottom : kTop;
        const Id neutral = op == Op::And ? kTop : kBottom;
        std::vector<Id> flat;
        std::function<void(Id)> push = [&](Id a) {
            if (exprs_[a].op == op) {
                for (Id b : exprs_[a].args) push(b);
            } else if (a != neutral && std::ranges::find(flat, a) == flat.end()) {
                flat.push_back(a);
            }
        };
        for (Id a : ops) push(a);
        if (std::ranges::find(flat, absorbing) != flat.end()) return absorbing;
        if (flat.empty()) return neutral;
        if (flat.size() == 1) return flat.front();
        return intern({op, 0, std::move(flat)});
    }

    std::vector<Expr> exprs_;
    std::map<Expr, Id> index_;
    std::map<Id, Id> negation_;
    std::map<Iri, Id> atoms_;
    std::vector<Iri> atomNames_;
    std::map<Iri, Id> roleNames_;
    std::vector<Iri> roleList_;
};

Concept conjunction(std::vector<Concept> ops) {
    return ops.size() == 1 ? ops.front() : Concept::intersection(std::move(ops));
}

// The TBox compiled against a pool: absorbed inclusions per atom, lazy
// unfolding of definitions, and the internalized remainder.
struct Compiled {
    Pool pool;
    std::vector<std::vector<Id>> onAtom;
    std::vector<std::vector<Id>> onNegAtom;
    std::vector<Id> universal;
    std::vector<std::vector<bool>> sub;       // sub[r][s]: r ⊑ s
    std::vector<std::vector<Id>> transitiveBelow;  // transitive s with s ⊑ r
    bool equalityBlocking = false;

    void atomRule(Id atom, Id body, bool negative) {
        auto& table = negative ? onNegAtom : onAtom;
        if (table.size() <= atom) table.resize(atom + 1);
        table[atom].push_back(body);
    }
};

void absorb(const Concept& c, const Concept& d, const NormalizedTBox& tbox, std::vector<std::pair<Iri, Concept>>& onAtom,
            std::vector<Concept>& universal) {
    using K = Concept::Kind;
    const auto internalize = [&] { universal.push_back(toNNF(Concept::unionOf({Concept::complement(c), d}))); };
    switch (c.kind()) {
        case K::Top: universal.push_back(d); return;
        case K::Bottom: return;
        case K::Named:
            if (tbox.definitions.contains(c.iri()))
                internalize();
            else
                onAtom.emplace_back(c.iri(), d);
            return;
        case K::Union:
            for (const auto& op : c.operands()) absorb(op, d, tbox, onAtom, universal);
            return;
        case K::Existential:
            // ∃r.F ⊑ D is equivalent to F ⊑ ∀r⁻.D
            absorb(c.filler(), Concept::all(c.role().inverted(), d), tbox, onAtom, universal);
            return;
        case K::Intersection: {
            const auto ops = c.operands();
            const auto pick = [&](auto pred) -> std::optional<std::size_t> {
                for (std::size_t i = 0; i < ops.size(); ++i)
                    if (pred(ops[i])) return i;
                return std::nullopt;
            };
            auto i = pick([&](const Concept& x) { return x.isNamed() && !tbox.definitions.contains(x.iri()); });
            if (!i) i = pick([](const Concept& x) { return x.kind() == K::Existential; });
            if (!i) break;
            std::vector<Concept> rest;
            for (std::size_t j = 0; j < ops.size(); ++j)
                if (j != *i) rest.push_back(ops[j]);
            const Concept residue =
                toNNF(Concept::unionOf({Concept::complement(conjunction(std::move(rest))), d}));
            absorb(ops[*i], residue, tbox, onAtom, universal);
            return;
        }
        default: break;
    }
    internalize();
}

void compile(Compiled& k, const NormalizedTBox& tbox) {
    std::vector<std::pair<Iri, Concept>> onAtom;
    std::vector<Concept> universal;
    for (const auto& [sub, super] : tbox.inclusions) absorb(sub, super, tbox, onAtom, universal);

    for (const auto& [name, def] : tbox.definitions) {
        const Id a = k.pool.atom(name);
        const Id atom = k.pool.at(a).ref;
        const Id body = k.pool.build(def);
        k.atomRule(atom, body, false);
        k.atomRule(atom, k.pool.negate(body), true);
    }
    for (const auto& [name, d] : onAtom) {
        const Id atom = k.pool.at(k.pool.atom(name)).ref;
        k.atomRule(atom, k.pool.build(d), false);
    }
    for (const auto& u : universal) {
        const Id id = k.pool.build(u);
        if (id != kTop && std::ranges::find(k.universal, id) == k.universal.end()) k.universal.push_back(id);
    }
    for (const Role& r : tbox.roles.roles()) k.pool.role(r);
}

// Called once every role is interned.
void finishRoles(Compiled& k, const NormalizedTBox& tbox, std::size_t exprCount) {
    const std::size_t n = k.pool.roleCount();
    k.sub.assign(n, std::vector<bool>(n, false));
    k.transitiveBelow.assign(n, {});
    bool mixed = false;
    for (Id r = 0; r < n; ++r) {
        for (Id s = 0; s < n; ++s) {
            k.sub[r][s] = r == s || tbox.roles.isSubRole(k.pool.roleOf(r), k.pool.roleOf(s));
            if (k.sub[r][s] && (r & 1) != (s & 1)) mixed = true;
        }
    }
    for (Id r = 0; r < n; ++r)
        for (Id s = 0; s < n; ++s)
            if (k.sub[s][r] && tbox.isTransitive(k.pool.roleOf(s))) k.transitiveBelow[r].push_back(s);

    bool inverse = mixed;
    for (Id id = 0; id < exprCount && !inverse; ++id) {
        const Expr& e = k.pool.at(id);
        if ((e.op == Op::Some || e.op == Op::All) && (e.ref & 1)) inverse = true;
    }
    k.equalityBlocking = inverse;
}

// Branch levels a fact depends on, sorted. Level k is the k-th open choice.
using Deps = std::vector<std::uint32_t>;

Deps merge(const Deps& a, const Deps& b) {
    Deps out;
    out.reserve(a.size() + b.size());
    std::ranges::set_union(a, b, std::back_inserter(out));
    return out;
}

struct TNode {
    std::vector<Id> label;  // sorted
    std::vector<Deps> deps;  // parallel to label
    std::int64_t parent = -1;
    bool individual = false;
    std::vector<std::size_t> edges;
};

struct TEdge {
    std::size_t from;
    std::size_t to;
    std::vector<Id> roles;  // sorted
    std::vector<Deps> deps;  // parallel to roles
};

struct State {
    std::vector<TNode> nodes;
    std::vector<TEdge> edges;
    bool clash = false;
    Deps clashDeps;
};

bool contains(const std::vector<Id>& label, Id id) { return std::ranges::binary_search(label, id); }

class Engine {
public:
    Engine(Compiled& k, const ReasonerLimits& limits) : k_(k), limits_(limits) {}

    std::size_t addNode(std::int64_t parent, bool individual) {
        if (s_.nodes.size() >= limits_.maxNodes)
            throw ResourceLimitExceeded("completion graph exceeded " + std::to_string(limits_.maxNodes) + " nodes");
        s_.nodes.push_back(TNode{{}, {}, parent, individual, {}});
        const std::size_t n = s_.nodes.size() - 1;
        add(n, kTop, {});
        for (Id u : k_.universal) add(n, u, {});
        return n;
    }

    void addEdge(std::size_t from, std::size_t to, Id role, const Deps& deps) {
        for (std::size_t e : s_.nodes[from].edges) {
            TEdge& edge = s_.edges[e];
            if (edge.from != from || edge.to != to) continue;
            auto it = std::ranges::lower_bound(edge.roles, role);
            if (it != edge.roles.end() && *it == role) return;
            edge.deps.insert(edge.deps.begin() + (it - edge.roles.begin()), deps);
            edge.roles.insert(it, role);
            requeueUniversals(from);
            requeueUniversals(to);
            return;
        }
        s_.edges.push_back(TEdge{from, to, {role}, {deps}});
        s_.nodes[from].edges.push_back(s_.edges.size() - 1);
        if (to != from) s_.nodes[to].edges.push_back(s_.edges.size() - 1);
        requeueUniversals(from);
        requeueUniversals(to);
    }

    void add(std::size_t n, Id id, const Deps& deps) {
        auto& node = s_.nodes[n];
        auto it = std::ranges::lower_bound(node.label, id);
        if (it != node.label.end() && *it == id) return;
        node.deps.insert(node.deps.begin() + (it - node.label.begin()), deps);
        node.label.insert(it, id);
        const Expr& e = k_.pool.at(id);
        if (id == kBottom) clash(deps);
        if (e.op == Op::Atom || e.op == Op::NegAtom) {
            const Id neg = k_.pool.negate(id);
            if (contains(node.label, neg)) clash(merge(deps, depsOf(n, neg)));
        }
        queue_.emplace_back(n, id);
    }

    const Deps& depsOf(std::size_t n, Id id) const { return depsIn(s_, n, id); }

    SatResult run() {
        std::vector<Choice> choices;
        for (;;) {
            saturate();
            if (s_.clash) {
                if (!backtrack(choices)) return {};
                continue;
            }
            const auto blocking = computeBlocking();
            if (auto open = findOpenDisjunction(blocking)) {
                if (choices.size() >= limits_.maxBranchDepth)
                    throw ResourceLimitExceeded("branch depth exceeded " + std::to_string(limits_.maxBranchDepth));
                const auto level = static_cast<std::uint32_t>(choices.size() + 1);
                Deps deps = merge(depsOf(open->first, open->second), {level});
                choices.push_back(Choice{s_, open->first, open->second, 1, {}});
                add(open->first, k_.pool.at(open->second).args[0], deps);
                continue;
            }
            if (expandExistential(blocking)) continue;
            return {true, witness(blocking)};
        }
    }

private:
    struct Choice {
        State snapshot;
        std::size_t node;
        Id disjunction;
        std::size_t next;
        Deps failed;  // clash levels of the alternatives already refuted
    };

    struct Blocking {
        std::vector<std::optional<std::size_t>> blockedBy;
        std::vector<bool> indirect;

        bool blocked(std::size_t n) const { return blockedBy[n].has_value() || indirect[n]; }
    };

    static const Deps& depsIn(const State& s, std::size_t n, Id id) {
        const auto& node = s.nodes[n];
        return node.deps[static_cast<std::size_t>(std::ranges::lower_bound(node.label, id) - node.label.begin())];
    }

    void clash(Deps deps) {
        if (s_.clash) return;
        s_.clash = true;
        s_.clashDeps = std::move(deps);
    }

    // Calls f(neighbour, role, deps) for every role linking x to a neighbour,
    // seen from x.
    template <class F>
    void forNeighbours(std::size_t x, F&& f) {
        for (std::size_t e : s_.nodes[x].edges) {
            const TEdge edge = s_.edges[e];
            for (std::size_t i = 0; i < edge.roles.size(); ++i) {
                if (edge.from == x) f(edge.to, edge.roles[i], edge.deps[i]);
                if (edge.to == x) f(edge.from, edge.roles[i] ^ 1U, edge.deps[i]);
            }
        }
    }

    void requeueUniversals(std::size_t n) {
        for (Id id : s_.nodes[n].label)
            if (k_.pool.at(id).op == Op::All) queue_.emplace_back(n, id);
    }

    void process(std::size_t n, Id id) {
        const Expr e = k_.pool.at(id);
        const Deps deps = depsOf(n, id);
        switch (e.op) {
            case Op::And:
                for (Id a : e.args) add(n, a, deps);
                break;
            case Op::Atom:
            case Op::NegAtom: {
                const auto& table = e.op == Op::Atom ? k_.onAtom : k_.onNegAtom;
                if (e.ref < table.size())
                    for (Id c : table[e.ref]) add(n, c, deps);
                break;
            }
            case Op::All: {
                const Id r = e.ref;
                const Id filler = e.args[0];
                std::vector<std::tuple<std::size_t, Id, Deps>> targets;
                forNeighbours(n, [&](std::size_t y, Id t, const Deps& edgeDeps) {
                    if (k_.sub[t][r]) targets.emplace_back(y, filler, merge(deps, edgeDeps));
                    for (Id s : k_.transitiveBelow[r])
                        if (k_.sub[t][s]) targets.emplace_back(y, k_.pool.all(s, filler), merge(deps, edgeDeps));
                });
                for (const auto& [y, c, d] : targets) add(y, c, d);
                break;
            }
            default: break;
        }
    }

    void saturate() {
        while (!s_.clash) {
            while (!queue_.empty() && !s_.clash) {
                auto [n, id] = queue_.front();
                queue_.pop_front();
                process(n, id);
            }
            if (s_.clash || !propagateDisjunctions()) return;
        }
    }

    // Adds the only viable operand of each disjunction. Returns true if
    // anything changed.
    bool propagateDisjunctions() {
        bool changed = false;
        for (std::size_t n = 0; n < s_.nodes.size() && !s_.clash; ++n) {
            const std::vector<Id> label = s_.nodes[n].label;
            for (Id id : label) {
                if (k_.pool.at(id).op != Op::Or) continue;
                const std::vector<Id> args = k_.pool.at(id).args;
                if (std::ranges::any_of(args, [&](Id a) { return contains(s_.nodes[n].label, a); })) continue;
                std::optional<Id> viable;
                std::size_t count = 0;
                Deps deps = depsOf(n, id);
                for (Id a : args) {
                    const Id neg = k_.pool.negate(a);
                    if (contains(s_.nodes[n].label, neg)) {
                        deps = merge(deps, depsOf(n, neg));
                        continue;
                    }
                    viable = a;
                    ++count;
                }
                if (count == 0) {
                    clash(std::move(deps));
                    return true;
                }
                if (count == 1) {
                    add(n, *viable, deps);
                    changed = true;
                }
            }
        }
        return changed;
    }

    // Jumps back to the latest choice the clash depends on. Choices the
    // clash does not depend on are discarded without trying their
    // alternatives. The last alternative of a choice depends on whatever
    // refuted the others instead of on the choice itself.
    bool backtrack(std::vector<Choice>& choices) {
        Deps conflict = s_.clashDeps;
        while (!choices.empty()) {
            const auto level = static_cast<std::uint32_t>(choices.size());
            Choice& c = choices.back();
            if (!std::ranges::binary_search(conflict, level)) {
                choices.pop_back();
                continue;
            }
            std::erase(conflict, level);
            c.failed = merge(c.failed, conflict);
            const auto& args = k_.pool.at(c.disjunction).args;
            if (c.next >= args.size()) {
                conflict = c.failed;
                choices.pop_back();
                continue;
            }
            const Id alt = args[c.next++];
            const std::size_t node = c.node;
            Deps deps = depsIn(c.snapshot, node, c.disjunction);
            if (c.next >= args.size()) {
                deps = merge(deps, c.failed);
                s_ = std::move(c.snapshot);
                choices.pop_back();
            } else {
                deps = merge(deps, {level});
                s_ = c.snapshot;
            }
            queue_.clear();
            add(node, alt, deps);
            return true;
        }
        return false;
    }

    Blocking computeBlocking() const {
        const std::size_t count = s_.nodes.size();
        Blocking b{std::vector<std::optional<std::size_t>>(count), std::vector<bool>(count, false)};
        for (std::size_t n = 0; n < count; ++n) {
            const TNode& node = s_.nodes[n];
            if (node.individual || node.parent < 0) continue;
            const auto p = static_cast<std::size_t>(node.parent);
            if (!s_.nodes[p].individual && b.blocked(p)) {
                b.indirect[n] = true;
                continue;
            }
            for (std::int64_t a = node.parent; a >= 0 && !s_.nodes[a].individual; a = s_.nodes[a].parent) {
                const auto& mine = node.label;
                const auto& theirs = s_.nodes[a].label;
                const bool blocks = k_.equalityBlocking ? mine == theirs : std::ranges::includes(theirs, mine);
                if (blocks) {
                    b.blockedBy[n] = static_cast<std::size_t>(a);
                    break;
                }
            }
        }
        return b;
    }

    std::optional<std::pair<std::size_t, Id>> findOpenDisjunction(const Blocking& b) const {
        for (std::size_t n = 0; n < s_.nodes.size(); ++n) {
            if (b.indirect[n]) continue;
            const auto& label = s_.nodes[n].label;
            for (Id id : label) {
                const Expr& e = k_.pool.at(id);
                if (e.op != Op::Or) continue;
                if (std::ranges::none_of(e.args, [&](Id a) { return contains(label, a); })) return std::pair{n, id};
            }
        }
        return std::nullopt;
    }

    bool expandExistential(const Blocking& b) {
        for (std::size_t n = 0; n < s_.nodes.size(); ++n) {
            if (b.blocked(n)) continue;
            const std::vector<Id> label = s_.nodes[n].label;
            for (Id id : label) {
                const Expr e = k_.pool.at(id);
                if (e.op != Op::Some) continue;
                bool satisfied = false;
                forNeighbours(n, [&](std::size_t y, Id t, const Deps&) {
                    if (k_.sub[t][e.ref] && contains(s_.nodes[y].label, e.args[0])) satisfied = true;
                });
                if (satisfied) continue;
                const Deps deps = depsOf(n, id);
                const std::size_t child = addNode(static_cast<std::int64_t>(n), false);
                add(child, e.args[0], deps);
                addEdge(n, child, e.ref, deps);
                return true;
            }
        }
        return false;
    }

    CompletionGraph witness(const Blocking& b) const {
        CompletionGraph g;
        for (std::size_t n = 0; n < s_.nodes.size(); ++n) {
            const TNode& node = s_.nodes[n];
            CompletionGraph::Node out;
            for (Id id : node.label) out.label.push_back(k_.pool.toConcept(id));
            if (node.parent >= 0) out.parent = static_cast<std::size_t>(node.parent);
            out.individual = individuals_.size() > n ? individuals_[n] : std::nullopt;
            out.blockedBy = b.blockedBy[n];
            out.indirectlyBlocked = b.indirect[n];
            g.nodes.push_back(std::move(out));
        }
        for (const TEdge& e : s_.edges) {
            CompletionGraph::Edge out{e.from, e.to, {}};
            for (Id r : e.roles) out.roles.push_back(k_.pool.roleOf(r));
            g.edges.push_back(std::move(out));
        }
        return g;
    }

    Compiled& k_;
    const ReasonerLimits& limits_;
    State s_;
    std::deque<std::pair<std::size_t, Id>> queue_;

public:
    std::vector<std::optional<Iri>> individuals_;
};

}  // namespace

SatResult runTableau(const std::vector<InitialNode>& nodes, const std::vector<InitialEdge>& edges,
                     const NormalizedTBox& tbox, const ReasonerLimits& limits) {
    limits.validate();
    Compiled k;
    compile(k, tbox);
    std::vector<std::vector<Id>> labels;
    for (const auto& node : nodes) {
        std::vector<Id> ids;
        for (const auto& c : node.label) ids.push_back(k.pool.build(toNNF(c)));
        labels.push_back(std::move(ids));
    }
    std::vector<Id> roles;
    for (const auto& e : edges) roles.push_back(k.pool.role(e.role));
    // Everything the run can mention is interned above, apart from ∀ over
    // transitive roles, which only reuses existing roles.
    const std::size_t exprCount = k.pool.size();
    finishRoles(k, tbox, exprCount);

    Engine engine(k, limits);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        engine.addNode(-1, nodes[i].individual.has_value());
        engine.individuals_.push_back(nodes[i].individual);
        for (Id id : labels[i]) engine.add(i, id, {});
    }
    for (std::size_t i = 0; i < edges.size(); ++i) engine.addEdge(edges[i].from, edges[i].to, roles[i], {});
    return engine.run();
}

}  // namespace detail

namespace {

using Mask = std::vector<bool>;

Mask extension(const Concept& c, const FiniteModel& m) {
    using K = Concept::Kind;
    Mask out(m.size, false);
    switch (c.kind()) {
        case K::Named:
            if (auto it = m.concepts.find(c.iri()); it != m.concepts.end())
                for (std::size_t e : it->second) out[e] = true;
            return out;
        case K::Top: return Mask(m.size, true);
        case K::Bottom: return out;
        case K::Complement: {
            Mask inner = extension(c.filler(), m);
            for (std::size_t e = 0; e < m.size; ++e) out[e] = !inner[e];
            return out;
        }
        case K::Intersection:
        case K::Union: {
            const bool conj = c.kind() == K::Intersection;
            out.assign(m.size, conj);
            for (const auto& op : c.operands()) {
                Mask x = extension(op, m);
                for (std::size_t e = 0; e < m.size; ++e) out[e] = conj ? out[e] && x[e] : out[e] || x[e];
            }
            return out;
        }
        case K::Existential:
        case K::Universal: {
            const bool some = c.kind() == K::Existential;
            const Mask filler = extension(c.filler(), m);
            out.assign(m.size, !some);
            auto it = m.roles.find(c.role().name);
            if (it == m.roles.end()) return out;
            for (auto [a, b] : it->second) {
                const std::size_t from = c.role().inverse ? b : a;
                const std::size_t to = c.role().inverse ? a : b;
                if (some && filler[to]) out[from] = true;
                if (!some && !filler[to]) out[from] = false;
            }
            return out;
        }
    }
    return out;
}

void namesIn(const Concept& c, std::set<Iri>& out) {
    switch (c.kind()) {
        case Concept::Kind::Named: out.insert(c.iri()); break;
        case Concept::Kind::Top:
        case Concept::Kind::Bottom: break;
        case Concept::Kind::Existential:
        case Concept::Kind::Universal: namesIn(c.filler(), out); break;
        default:
            for (const auto& op : c.operands()) namesIn(op, out);
    }
}

}  // namespace

FiniteModel foldToModel(const CompletionGraph& witness, const NormalizedTBox& tbox) {
    FiniteModel m;
    const std::size_t count = witness.nodes.size();
    std::vector<std::optional<std::size_t>> element(count);
    for (std::size_t n = 0; n < count; ++n) {
        const auto& node = witness.nodes[n];
        if (node.blockedBy || node.indirectlyBlocked) continue;
        element[n] = m.size++;
        if (node.individual) m.individuals.emplace(*node.individual, *element[n]);
    }
    const auto resolve = [&](std::size_t n) -> std::optional<std::size_t> {
        const auto& node = witness.nodes[n];
        if (node.indirectlyBlocked) return std::nullopt;
        return node.blockedBy ? element[*node.blockedBy] : element[n];
    };
    if (count > 0) m.root = resolve(0).value_or(0);

    for (std::size_t n = 0; n < count; ++n) {
        if (!element[n]) continue;
        for (const auto& c : witness.nodes[n].label)
            if (c.isNamed() && !tbox.definitions.contains(c.iri())) m.concepts[c.iri()].insert(*element[n]);
    }

    for (const auto& edge : witness.edges) {
        // Only edges leaving a non-blocked node are kept; their targets may be redirected.
        if (!element[edge.from]) continue;
        const auto to = resolve(edge.to);
        if (!to) continue;
        for (const Role& r : edge.roles) {
            if (r.inverse)
                m.roles[r.name].emplace(*to, *element[edge.from]);
            else
                m.roles[r.name].emplace(*element[edge.from], *to);
        }
    }

    // Close under the role hierarchy and transitivity.
    bool changed = true;
    while (changed) {
        changed = false;
        const auto snapshot = m.roles;
        for (const auto& [name, pairs] : snapshot) {
            for (const Role& s : tbox.roles.superRoles(Role::named(name))) {
                auto& target = m.roles[s.name];
                for (auto [a, b] : pairs) {
                    if (target.emplace(s.inverse ? b : a, s.inverse ? a : b).second) changed = true;
                }
            }
        }
        for (const Iri& name : tbox.transitiveRoles) {
            auto it = m.roles.find(name);
            if (it == m.roles.end()) continue;
            auto& pairs = it->second;
            std::set<std::pair<std::size_t, std::size_t>> add;
            for (auto [a, b] : pairs)
                for (auto [c, d] : pairs)
                    if (b == c && !pairs.contains({a, d})) add.emplace(a, d);
            if (!add.empty()) {
                pairs.insert(add.begin(), add.end());
                changed = true;
            }
        }
    }

    // Defined concepts follow their definitions, evaluated in dependency order.
    std::set<Iri> done;
    std::function<void(const Iri&)> define = [&](const Iri& name) {
        if (done.contains(name)) return;
        done.insert(name);
        const Concept& def = tbox.definitions.at(name);
        std::set<Iri> deps;
        namesIn(def, deps);
        for (const Iri& d : deps)
            if (tbox.definitions.contains(d)) define(d);
        const Mask ext = extension(def, m);
        auto& set = m.concepts[name];
        set.clear();
        for (std::size_t e = 0; e < m.size; ++e)
            if (ext[e]) set.insert(e);
    };
    for (const auto& [name, def] : tbox.definitions) define(name);
    return m;
}

SatResult isSatisfiable(const Concept& c, const NormalizedTBox& tbox, const ReasonerLimits& limits) {
    return detail::runTableau({detail::InitialNode{std::nullopt, {c}}}, {}, tbox, limits);
}

bool isSubsumedBy(const Concept& c, const Concept& d, const NormalizedTBox& tbox, const ReasonerLimits& limits) {
    return !isSatisfiable(Concept::intersection({c, Concept::complement(d)}), tbox, limits).satisfiable;
}

}  // namespace ontokit
