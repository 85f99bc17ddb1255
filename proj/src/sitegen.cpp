#include "ontokit/sitegen.hpp"

#include "overloaded.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace ontokit {

using detail::Overloaded;

namespace {

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string displayName(const Iri& iri) {
    std::string name(iri.fragment());
    return name.empty() ? iri.str() : name;
}

std::string_view kindLabel(EntityKind kind) {
    switch (kind) {
        case EntityKind::Concept: return "Class";
        case EntityKind::ObjectRole: return "Object property";
        case EntityKind::DataRole: return "Data property";
        case EntityKind::AnnotationRole: return "Annotation property";
        case EntityKind::Individual: return "Individual";
        case EntityKind::Datatype: return "Datatype";
    }
    return "Entity";
}

// Builds the html and text forms of a statement side by side.
class Builder {
public:
    explicit Builder(const LinkResolver& links) : links_(links) {}

    Builder& text(std::string_view t) {
        entry_.html += escape(t);
        entry_.text += t;
        return *this;
    }

    Builder& entity(const Iri& iri, EntityKind kind) {
        const std::string name = displayName(iri);
        std::optional<std::string> target = links_ ? links_(iri, kind) : std::nullopt;
        if (target)
            entry_.html += "<a href=\"" + escape(*target) + "\">" + escape(name) + "</a>";
        else
            entry_.html += escape(name);
        entry_.text += name;
        return *this;
    }

    Builder& append(const RenderedEntry& e) {
        entry_.html += e.html;
        entry_.text += e.text;
        return *this;
    }

    RenderedEntry take() { return std::move(entry_); }

private:
    const LinkResolver& links_;
    RenderedEntry entry_;
};

enum Level { kOr = 1, kAnd = 2, kPrefix = 3, kAtom = 4 };

Level levelOf(const Concept& c) {
    switch (c.kind()) {
        case Concept::Kind::Union: return kOr;
        case Concept::Kind::Intersection: return kAnd;
        case Concept::Kind::Complement:
        case Concept::Kind::Existential:
        case Concept::Kind::Universal: return kPrefix;
        default: return kAtom;
    }
}

void renderRole(const Role& r, Builder& b) {
    b.entity(r.name, EntityKind::ObjectRole);
    if (r.inverse) b.text("⁻");
}

void render(const Concept& c, int context, Builder& b) {
    const bool parens = levelOf(c) < context;
    if (parens) b.text("(");
    switch (c.kind()) {
        case Concept::Kind::Named: b.entity(c.iri(), EntityKind::Concept); break;
        case Concept::Kind::Top: b.text("⊤"); break;
        case Concept::Kind::Bottom: b.text("⊥"); break;
        case Concept::Kind::Intersection:
        case Concept::Kind::Union: {
            const bool conj = c.kind() == Concept::Kind::Intersection;
            bool first = true;
            for (const auto& op : c.operands()) {
                if (!first) b.text(conj ? " ⊓ " : " ⊔ ");
                first = false;
                render(op, conj ? kPrefix : kAnd, b);
            }
            break;
        }
        case Concept::Kind::Complement:
            b.text("¬");
            render(c.filler(), kPrefix, b);
            break;
        case Concept::Kind::Existential:
        case Concept::Kind::Universal:
            b.text(c.kind() == Concept::Kind::Existential ? "∃" : "∀");
            renderRole(c.role(), b);
            b.text(".");
            render(c.filler(), kPrefix, b);
            break;
    }
    if (parens) b.text(")");
}

void renderList(const std::vector<Concept>& members, std::string_view separator, Builder& b) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) b.text(separator);
        render(members[i], kAnd, b);
    }
}

std::string quoted(const Literal& lit) { return "\"" + lit.lexical + "\""; }

RenderedEntry renderAxiom(const Axiom& axiom, const LinkResolver& links) {
    Builder b(links);
    const auto expr = [&](const Concept& c) { render(c, kOr, b); };
    const auto role = [&](const Iri& r) { b.entity(r, EntityKind::ObjectRole); };
    std::visit(Overloaded{
                   [&](const axioms::SubConceptOf& a) {
                       expr(a.sub);
                       b.text(" ⊑ ");
                       expr(a.super);
                   },
                   [&](const axioms::EquivalentConcepts& a) { renderList(a.members, " ≡ ", b); },
                   [&](const axioms::DisjointConcepts& a) {
                       b.text("Disjoint(");
                       renderList(a.members, ", ", b);
                       b.text(")");
                   },
                   [&](const axioms::SubRoleOf& a) {
                       role(a.sub);
                       b.text(" ⊑ ");
                       role(a.super);
                   },
                   [&](const axioms::InverseRoles& a) {
                       role(a.first);
                       b.text(" ≡ ");
                       role(a.second);
                       b.text("⁻");
                   },
                   [&](const axioms::TransitiveRole& a) {
                       b.text("Trans(");
                       role(a.role);
                       b.text(")");
                   },
                   [&](const axioms::RoleDomain& a) {
                       b.text("∃");
                       role(a.role);
                       b.text(".⊤ ⊑ ");
                       expr(a.domain);
                   },
                   [&](const axioms::RoleRange& a) {
                       b.text("⊤ ⊑ ∀");
                       role(a.role);
                       b.text(".");
                       render(a.range, kPrefix, b);
                   },
                   [&](const axioms::ConceptAssertion& a) {
                       b.entity(a.individual, EntityKind::Individual);
                       b.text(" : ");
                       expr(a.type);
                   },
                   [&](const axioms::RoleAssertion& a) {
                       b.text("(");
                       b.entity(a.subject, EntityKind::Individual);
                       b.text(", ");
                       b.entity(a.object, EntityKind::Individual);
                       b.text(") : ");
                       role(a.role);
                   },
                   [&](const axioms::DataAssertion& a) {
                       b.text("(");
                       b.entity(a.subject, EntityKind::Individual);
                       b.text(", " + quoted(a.value) + ") : ");
                       b.entity(a.role, EntityKind::DataRole);
                   },
                   [&](const axioms::AnnotationAssertion& a) {
                       b.entity(a.property, EntityKind::AnnotationRole);
                       b.text("(" + displayName(a.subject) + ") = " + quoted(a.value));
                   },
                   [&](const axioms::Declaration& a) {
                       b.text(std::string(toString(a.entity.kind)) + ": ");
                       b.entity(a.entity.iri, a.entity.kind);
                   },
               },
               axiom);
    return b.take();
}

std::string sanitize(std::string_view fragment) {
    std::string out;
    for (char c : fragment) {
        const auto u = static_cast<unsigned char>(c);
        const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                          c == '-' || c == '.' || u >= 0x80;
        out += keep ? c : '_';
    }
    if (out.empty()) out = "entity";
    if (out.front() == '.') out.insert(out.begin(), '_');
    return out;
}

std::string lower(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

std::string pageHtml(const std::string& title, const std::string& header, const std::vector<RenderedSection>& sections,
                     EntityKind kind, const std::string& extra) {
    std::string out =
        "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>" + escape(title) +
        "</title>\n</head>\n<body>\n<nav><a href=\"index.html\">Index</a></nav>\n" + header;
    for (const auto& s : sections) {
        out += "<h2>" + escape(headingLabel(s.heading, kind)) + "</h2>\n<ul>\n";
        for (const auto& e : s.entries) out += "<li>" + e.html + "</li>\n";
        out += "</ul>\n";
    }
    out += extra;
    out += "</body>\n</html>\n";
    return out;
}

// Collects a page's sections in heading order, skipping empty ones and
// duplicate entries.
class Sections {
public:
    void add(Heading h, RenderedEntry e) {
        auto& list = byHeading_[h];
        if (std::ranges::none_of(list, [&](const RenderedEntry& x) { return x.text == e.text; }))
            list.push_back(std::move(e));
    }

    std::vector<RenderedSection> take() {
        std::vector<RenderedSection> out;
        for (auto& [h, entries] : byHeading_)
            if (!entries.empty()) out.push_back({h, std::move(entries)});
        return out;
    }

private:
    std::map<Heading, std::vector<RenderedEntry>> byHeading_;
};

bool mentionsIri(const Concept& c, const Iri& iri) {
    return c.isNamed() && c.iri() == iri;
}

}  // namespace

std::string_view headingLabel(Heading heading, EntityKind kind) {
    const bool individual = kind == EntityKind::Individual;
    const bool concept_ = kind == EntityKind::Concept;
    switch (heading) {
        case Heading::AssertedSuperclasses: return individual ? "Asserted types" : "Asserted superclasses";
        case Heading::InferredSuperclasses: return individual ? "Inferred types" : "Inferred superclasses";
        case Heading::EquivalentTo: return "Equivalent to";
        case Heading::DisjointWith: return "Disjoint with";
        case Heading::SubProperties: return "Property hierarchy";
        case Heading::InverseOf: return "Inverse of";
        case Heading::DomainOf: return concept_ ? "Domain of" : "Domain";
        case Heading::RangeOf: return concept_ ? "Range of" : "Range";
        case Heading::Members: return "Members";
        case Heading::PropertyAssertions: return "Property assertions";
        case Heading::Annotations: return "Annotations";
        case Heading::Usage: return "Usage";
    }
    return "";
}

const RenderedSection* SiteDocument::section(Heading heading) const {
    for (const auto& s : sections)
        if (s.heading == heading) return &s;
    return nullptr;
}

RenderedEntry renderExpression(const Concept& c, const LinkResolver& links) {
    Builder b(links);
    render(c, kOr, b);
    return b.take();
}

std::map<Entity, std::string> pagePaths(const Ontology& o) {
    std::vector<Entity> declared;
    for (const Entity& e : signature(o))
        if (o.isDeclared(e)) declared.push_back(e);
    std::ranges::sort(declared, [](const Entity& a, const Entity& b) {
        return a.iri != b.iri ? a.iri < b.iri : a.kind < b.kind;
    });
    std::set<std::string> taken{"index"};
    std::map<Entity, std::string> out;
    for (const Entity& e : declared) {
        const std::string base = sanitize(e.iri.fragment());
        std::string name = base;
        for (int n = 2; taken.contains(lower(name)); ++n) name = base + "-" + std::to_string(n);
        taken.insert(lower(name));
        out.emplace(e, name + ".html");
    }
    return out;
}

std::vector<SiteDocument> generateSite(const Ontology& o, const Taxonomy& inferred, const Taxonomy& asserted,
                                       const std::map<Iri, std::set<Iri>>& realization) {
    const auto paths = pagePaths(o);
    const LinkResolver links = [&](const Iri& iri, EntityKind kind) -> std::optional<std::string> {
        auto it = paths.find(Entity{kind, iri});
        if (it == paths.end()) return std::nullopt;
        return it->second;
    };
    const auto entity = [&](const Iri& iri, EntityKind kind) { return Builder(links).entity(iri, kind).take(); };
    const auto concept_ = [&](const Iri& iri) {
        if (iri == vocab::thing()) return RenderedEntry{"⊤", "⊤"};
        if (iri == vocab::nothing()) return RenderedEntry{"⊥", "⊥"};
        return entity(iri, EntityKind::Concept);
    };
    const auto expr = [&](const Concept& c) { return renderExpression(c, links); };

    std::vector<SiteDocument> docs;
    for (const auto& [e, path] : paths) {
        Sections s;
        const Iri& me = e.iri;
        for (const auto& axiom : o.axioms()) {
            std::visit(
                Overloaded{
                    [&](const axioms::SubConceptOf& a) {
                        if (e.kind == EntityKind::Concept && mentionsIri(a.sub, me))
                            s.add(Heading::AssertedSuperclasses, expr(a.super));
                    },
                    [&](const axioms::EquivalentConcepts& a) {
                        if (e.kind != EntityKind::Concept) return;
                        if (std::ranges::none_of(a.members, [&](const Concept& c) { return mentionsIri(c, me); }))
                            return;
                        for (const auto& c : a.members)
                            if (!mentionsIri(c, me)) s.add(Heading::EquivalentTo, expr(c));
                    },
                    [&](const axioms::DisjointConcepts& a) {
                        if (e.kind != EntityKind::Concept) return;
                        if (std::ranges::none_of(a.members, [&](const Concept& c) { return mentionsIri(c, me); }))
                            return;
                        for (const auto& c : a.members)
                            if (!mentionsIri(c, me)) s.add(Heading::DisjointWith, expr(c));
                    },
                    [&](const axioms::SubRoleOf& a) {
                        if (e.kind == EntityKind::ObjectRole && (a.sub == me || a.super == me))
                            s.add(Heading::SubProperties, renderAxiom(axiom, links));
                    },
                    [&](const axioms::InverseRoles& a) {
                        if (e.kind != EntityKind::ObjectRole) return;
                        if (a.first == me) s.add(Heading::InverseOf, entity(a.second, EntityKind::ObjectRole));
                        if (a.second == me) s.add(Heading::InverseOf, entity(a.first, EntityKind::ObjectRole));
                    },
                    [&](const axioms::RoleDomain& a) {
                        if (e.kind == EntityKind::ObjectRole && a.role == me) s.add(Heading::DomainOf, expr(a.domain));
                        if (e.kind == EntityKind::Concept && mentionsIri(a.domain, me))
                            s.add(Heading::DomainOf, entity(a.role, EntityKind::ObjectRole));
                    },
                    [&](const axioms::RoleRange& a) {
                        if (e.kind == EntityKind::ObjectRole && a.role == me) s.add(Heading::RangeOf, expr(a.range));
                        if (e.kind == EntityKind::Concept && mentionsIri(a.range, me))
                            s.add(Heading::RangeOf, entity(a.role, EntityKind::ObjectRole));
                    },
                    [&](const axioms::ConceptAssertion& a) {
                        if (e.kind == EntityKind::Individual && a.individual == me)
                            s.add(Heading::AssertedSuperclasses, expr(a.type));
                        if (e.kind == EntityKind::Concept && mentionsIri(a.type, me))
                            s.add(Heading::Members, entity(a.individual, EntityKind::Individual));
                    },
                    [&](const axioms::RoleAssertion& a) {
                        const bool asRole = e.kind == EntityKind::ObjectRole && a.role == me;
                        const bool asSubject = e.kind == EntityKind::Individual && a.subject == me;
                        if (asRole) {
                            Builder b(links);
                            b.entity(a.subject, EntityKind::Individual).text(" → ").entity(a.object,
                                                                                          EntityKind::Individual);
                            s.add(Heading::PropertyAssertions, b.take());
                        }
                        if (asSubject) {
                            Builder b(links);
                            b.entity(a.role, EntityKind::ObjectRole).text(": ").entity(a.object, EntityKind::Individual);
                            s.add(Heading::PropertyAssertions, b.take());
                        }
                    },
                    [&](const axioms::DataAssertion& a) {
                        if (e.kind == EntityKind::DataRole && a.role == me) {
                            Builder b(links);
                            b.entity(a.subject, EntityKind::Individual).text(": " + a.value.lexical);
                            s.add(Heading::PropertyAssertions, b.take());
                        }
                        if (e.kind == EntityKind::Individual && a.subject == me) {
                            Builder b(links);
                            b.entity(a.role, EntityKind::DataRole).text(": " + a.value.lexical);
                            s.add(Heading::PropertyAssertions, b.take());
                        }
                    },
                    [&](const axioms::AnnotationAssertion& a) {
                        if (a.subject == me && e.kind != EntityKind::AnnotationRole) {
                            Builder b(links);
                            b.entity(a.property, EntityKind::AnnotationRole).text(": " + a.value.lexical);
                            s.add(Heading::Annotations, b.take());
                        }
                        if (e.kind == EntityKind::AnnotationRole && a.property == me) {
                            Builder b(links);
                            b.text(displayName(a.subject) + ": " + a.value.lexical);
                            s.add(Heading::PropertyAssertions, b.take());
                        }
                    },
                    [](const auto&) {},
                },
                axiom);
        }

        if (e.kind == EntityKind::Concept && inferred.contains(me)) {
            const auto g = inferred.groupOf(me);
            for (auto p : inferred.parents(g))
                for (const Iri& parent : inferred.members(p)) s.add(Heading::InferredSuperclasses, concept_(parent));
            for (const Iri& other : inferred.members(g))
                if (other != me) s.add(Heading::EquivalentTo, concept_(other));
            for (const auto& [individual, types] : realization) {
                const bool member = std::ranges::any_of(types, [&](const Iri& t) {
                    return t == me || (inferred.contains(t) && inferred.subsumes(me, t));
                });
                if (member) s.add(Heading::Members, entity(individual, EntityKind::Individual));
            }
        }
        if (e.kind == EntityKind::Individual) {
            if (auto it = realization.find(me); it != realization.end())
                for (const Iri& t : it->second) s.add(Heading::InferredSuperclasses, concept_(t));
        }
        if (o.isDeclared(e)) {
            for (const Axiom& axiom : usages(e, o))
                if (!std::holds_alternative<axioms::Declaration>(axiom)) s.add(Heading::Usage, renderAxiom(axiom, links));
        }
        if (e.kind == EntityKind::Concept && asserted.contains(me)) {
            for (auto p : asserted.parents(asserted.groupOf(me)))
                for (const Iri& parent : asserted.members(p)) s.add(Heading::AssertedSuperclasses, concept_(parent));
        }

        SiteDocument doc;
        doc.relativePath = path;
        doc.title = displayName(me) + " (" + std::string(kindLabel(e.kind)) + ")";
        doc.sections = s.take();
        const std::string header = "<h1>" + escape(displayName(me)) + "</h1>\n<p>" + escape(kindLabel(e.kind)) +
                                   " <code>" + escape(me.str()) + "</code></p>\n";
        doc.html = pageHtml(doc.title, header, doc.sections, e.kind, "");
        docs.push_back(std::move(doc));
    }

    // Index: counts, the inferred concept tree and every entity page.
    const EntityCounts counts = computeCounts(o);
    std::string body = "<h1>" + escape(displayName(o.iri())) + "</h1>\n<p>Ontology <code>" + escape(o.iri().str()) +
                       "</code></p>\n<h2>Entity counts</h2>\n<table>\n";
    const std::vector<std::pair<std::string, std::size_t>> rows{
        {"concepts", counts.concepts},
        {"conceptsIncludingThing", counts.conceptsIncludingThing()},
        {"objectRoles", counts.objectRoles},
        {"dataRoles", counts.dataRoles},
        {"annotationRoles", counts.annotationRoles},
        {"individuals", counts.individuals},
        {"datatypes", counts.datatypes},
    };
    for (const auto& [key, value] : rows)
        body += "<tr><th>" + key + "</th><td id=\"count-" + key + "\">" + std::to_string(value) + "</td></tr>\n";
    body += "</table>\n<h2>Inferred class hierarchy</h2>\n";

    const auto groupLabel = [&](Taxonomy::Group g) {
        std::string out;
        for (const Iri& m : inferred.members(g)) {
            if (!out.empty()) out += " ≡ ";
            out += concept_(m).html;
        }
        return out;
    };
    std::function<void(Taxonomy::Group, std::string&)> tree = [&](Taxonomy::Group g, std::string& out) {
        out += "<li>" + groupLabel(g);
        std::vector<Taxonomy::Group> kids;
        for (auto c : inferred.children(g))
            if (c != inferred.bottom() || inferred.members(c).size() > 1) kids.push_back(c);
        if (!kids.empty()) {
            out += "\n<ul>\n";
            for (auto c : kids) tree(c, out);
            out += "</ul>\n";
        }
        out += "</li>\n";
    };
    if (inferred.groupCount() > 0) {
        body += "<ul>\n";
        tree(inferred.top(), body);
        body += "</ul>\n";
    }
    for (EntityKind kind : {EntityKind::Concept, EntityKind::ObjectRole, EntityKind::DataRole,
                            EntityKind::AnnotationRole, EntityKind::Individual, EntityKind::Datatype}) {
        std::string list;
        for (const auto& [e, path] : paths)
            if (e.kind == kind) list += "<li>" + entity(e.iri, kind).html + "</li>\n";
        if (!list.empty()) body += "<h2>" + escape(kindLabel(kind)) + " pages</h2>\n<ul>\n" + list + "</ul>\n";
    }

    SiteDocument index;
    index.relativePath = "index.html";
    index.title = displayName(o.iri());
    index.html = "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>" +
                 escape(index.title) + "</title>\n</head>\n<body>\n" + body + "</body>\n</html>\n";
    docs.push_back(std::move(index));

    std::ranges::sort(docs, {}, &SiteDocument::relativePath);
    return docs;
}

LinkReport verifyLinks(const std::vector<SiteDocument>& docs) {
    std::set<std::string> paths;
    for (const auto& d : docs) paths.insert(d.relativePath);
    LinkReport report;
    constexpr std::string_view kHref = "href=\"";
    for (const auto& d : docs) {
        for (std::size_t pos = d.html.find(kHref); pos != std::string::npos; pos = d.html.find(kHref, pos)) {
            pos += kHref.size();
            const std::size_t end = d.html.find('"', pos);
            if (end == std::string::npos) break;
            std::string target = d.html.substr(pos, end - pos);
            pos = end;
            if (target.empty() || target.front() == '#' || target.front() == '/' ||
                target.find(':') != std::string::npos)
                continue;
            if (auto hash = target.find('#'); hash != std::string::npos) target.erase(hash);
            ++report.totalLinks;
            if (!paths.contains(target)) report.brokenList.emplace_back(d.relativePath, target);
        }
    }
    report.brokenLinks = report.brokenList.size();
    return report;
}

void writeSite(const std::filesystem::path& dir, const std::vector<SiteDocument>& docs) {
    std::filesystem::create_directories(dir);
    for (const auto& d : docs) {
        std::ofstream out(dir / d.relativePath, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + (dir / d.relativePath).string());
        out << d.html;
    }
}

std::string stripTags(std::string_view html) {
    std::string out;
    bool inTag = false;
    for (char c : html) {
        if (c == '<') inTag = true;
        else if (c == '>') inTag = false;
        else if (!inTag) out += c;
    }
    const std::pair<std::string_view, std::string_view> entities[] = {
        {"&lt;", "<"}, {"&gt;", ">"}, {"&quot;", "\""}, {"&amp;", "&"}};
    for (const auto& [from, to] : entities) {
        for (std::size_t pos = out.find(from); pos != std::string::npos; pos = out.find(from, pos + to.size()))
            out.replace(pos, from.size(), to);
    }
    return out;
}

}  // namespace ontokit
