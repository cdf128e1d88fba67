#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "koszul/diagram.hpp"
#include "koszul/dual.hpp"

using namespace koszul;

namespace {

RelationPattern make(int n, std::vector<std::pair<int, int>> rels) {
    return RelationPattern::normalize(n, rels);
}

const RelationPattern a1 = make(3, {{0, 3}});
const RelationPattern a2 = make(6, {{0, 3}, {3, 6}});
const RelationPattern a3 = make(6, {{0, 3}, {2, 4}, {3, 6}});

std::vector<std::string> labels(const std::vector<MarkedPoint>& pts) {
    std::vector<std::string> out;
    for (const auto& p : pts) out.push_back(p.label());
    return out;
}

std::string fixture_path(const std::string& name) {
    return std::string(KOSZUL_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_occurrences(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + 1))
        ++n;
    return n;
}

}  // namespace

TEST_SUITE_BEGIN("diagram");

TEST_CASE("plain-side orders of the three-relation fixture") {
    using V = std::vector<std::string>;
    CHECK(labels(marked_order(a3, 0).plain_side) == V{});
    CHECK(labels(marked_order(a3, 1).plain_side) == V{"q(1,0)"});
    CHECK(labels(marked_order(a3, 2).plain_side) == V{"q(2,1)"});
    CHECK(labels(marked_order(a3, 3).plain_side) == V{"q(3,0)", "q(3,2)"});
    CHECK(labels(marked_order(a3, 4).plain_side) == V{"q(4,2)", "q(4,0)", "q(4,3)"});
    CHECK(labels(marked_order(a3, 5).plain_side) == V{"q(5,4)"});
    CHECK(labels(marked_order(a3, 6).plain_side) ==
          V{"q(6,3)", "q(6,0)", "q(6,2)", "q(6,5)"});
}

TEST_CASE("interior curve of a relation-free pattern") {
    MarkedCurve c = marked_order(make(4, {}), 2);
    CHECK(labels(c.dagger_side) == std::vector<std::string>{"q(3,2)"});
    CHECK(labels(c.plain_side) == std::vector<std::string>{"q(2,1)"});
}

TEST_CASE("dagger-side order interleaves odd then even indices") {
    // dagger sequence of 0 in the three-relation pattern is (0,1,3,4,6):
    // odd positions ascending then even descending gives 1, 4, 6, 3
    CHECK(labels(marked_order(a3, 0).dagger_side) ==
          std::vector<std::string>{"q(1,0)", "q(4,0)", "q(6,0)", "q(3,0)"});
}

TEST_CASE("every crossing appears once per side, n <= 9") {
    for (const auto& pat : enumerate_patterns_up_to(9)) {
        SequenceTable seqs(pat);
        std::map<std::pair<int, int>, int> plain_seen, dagger_seen;
        for (int p = 0; p <= pat.n(); ++p) {
            MarkedCurve c = marked_order(seqs, p);
            for (const auto& pt : c.plain_side) {
                CHECK(pt.j == p);
                ++plain_seen[{pt.j, pt.i}];
            }
            for (const auto& pt : c.dagger_side) {
                CHECK(pt.i == p);
                ++dagger_seen[{pt.j, pt.i}];
            }
        }
        CHECK(plain_seen == dagger_seen);
        for (const auto& [ji, cnt] : plain_seen) CHECK(cnt == 1);
        // the intersection set from below equals the set from above
        std::set<std::pair<int, int>> from_below, from_above;
        for (int p = 0; p <= pat.n(); ++p) {
            for (int i = 1; i <= seqs.l(p); ++i) from_below.insert({p, seqs.plain(p).at(i)});
            for (int i = 1; i <= seqs.l_dagger(p); ++i)
                from_above.insert({seqs.dagger(p).at(i), p});
        }
        CHECK(from_below == from_above);
    }
}

TEST_CASE("relation polygons on the fixtures") {
    PolygonWord quad = relation_polygon(a1, 1);
    REQUIRE(quad.vertices.size() == 4);
    CHECK(labels(quad.vertices) ==
          std::vector<std::string>{"q(1,0)", "q(2,1)", "q(3,2)", "q(3,0)"});
    REQUIRE(quad.edges.size() == 4);
    CHECK(quad.edges[0].curve == 0);
    CHECK(quad.edges[3].curve == 3);

    // relation (2,4) of the three-relation pattern is a triangle
    PolygonWord tri = relation_polygon(a3, 2);
    CHECK(tri.vertices.size() == 3);
    CHECK(labels(tri.vertices) ==
          std::vector<std::string>{"q(3,2)", "q(4,3)", "q(4,2)"});

    // relation (3,6) of the two-relation pattern is a quadrangle
    PolygonWord quad2 = relation_polygon(a2, 2);
    CHECK(quad2.vertices.size() == 4);
    CHECK(labels(quad2.vertices) ==
          std::vector<std::string>{"q(4,3)", "q(5,4)", "q(6,5)", "q(6,3)"});

    CHECK_THROWS(relation_polygon(a1, 0));
    CHECK_THROWS(relation_polygon(a1, 2));
}

TEST_CASE("relation polygons validate everywhere, n <= 9") {
    for (const auto& pat : enumerate_patterns_up_to(9)) {
        SequenceTable seqs(pat);
        for (int j = 1; j <= pat.size(); ++j) {
            PolygonWord w = relation_polygon(seqs, j);
            const auto& r = pat.relation(j - 1);
            CHECK(static_cast<int>(w.vertices.size()) == r.t - r.s + 1);
            // closed word: consecutive edges share exactly the vertex
            for (std::size_t e = 0; e < w.edges.size(); ++e) {
                const auto& cur = w.edges[e];
                const auto& nxt = w.edges[(e + 1) % w.edges.size()];
                const auto& shared = w.vertices[e];
                bool on_cur = shared.j == cur.curve || shared.i == cur.curve;
                bool on_nxt = shared.j == nxt.curve || shared.i == nxt.curve;
                CHECK(on_cur);
                CHECK(on_nxt);
            }
        }
    }
}

TEST_CASE("admissible chains on the fixtures") {
    SequenceTable s1(a1);
    auto c1 = admissible_chains(s1, build_dual(s1, SignConvention::LastArg));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(c1[0].arity() == 3);
    CHECK_FALSE(c1[0].value.is_zero());

    SequenceTable s0(make(5, {}));
    CHECK(admissible_chains(s0, build_dual(s0, SignConvention::LastArg)).empty());

    SequenceTable s3(a3);
    auto c3 = admissible_chains(s3, build_dual(s3, SignConvention::LastArg));
    bool found = false;
    for (const auto& ch : c3) found = found || ch.vertices == std::vector<int>{0, 3, 6};
    CHECK(found);
}

TEST_CASE("chains biject with non-unital mu entries, n <= 5") {
    for (const auto& pat : enumerate_patterns_up_to(5)) {
        SequenceTable seqs(pat);
        GradedBasisCategory dual = build_dual(seqs, SignConvention::LastArg);
        auto chains = admissible_chains(seqs, dual);
        std::size_t nonunital = 0;
        for (const auto& [key, term] : dual.mu_table()) {
            bool unital = false;
            for (int m : key) unital = unital || dual.morphism(m).is_identity;
            if (!unital) ++nonunital;
        }
        CHECK(chains.size() == nonunital);
        for (const auto& ch : chains) CHECK_FALSE(ch.value.is_zero());
    }
}

TEST_CASE("svg output is deterministic and matches the goldens") {
    CHECK(render_svg(a1) == render_svg(a1));
    CHECK(render_svg(a3) == render_svg(a3));

    CHECK(render_svg(a1) == slurp(fixture_path("goldens/a1.svg")));
    CHECK(render_svg(a2) == slurp(fixture_path("goldens/a2.svg")));
    CHECK(render_svg(a3) == slurp(fixture_path("goldens/a3.svg")));
    CHECK(render_svg(make(2, {})) == slurp(fixture_path("goldens/m0_n2.svg")));
}

TEST_CASE("svg polygon inventory") {
    std::string svg1 = render_svg(a1);
    CHECK(count_occurrences(svg1, "poly-rel-") == 1);
    CHECK(count_occurrences(svg1, "<polyline id=\"curve-") == 4);
    CHECK(svg1.find("poly-chain-0-1-2-3") != std::string::npos);

    std::string svg2 = render_svg(a2);
    CHECK(count_occurrences(svg2, "poly-rel-") == 2);

    std::string svg3 = render_svg(a3);
    CHECK(count_occurrences(svg3, "poly-rel-") == 3);
    // triangle: the relation (2,4) polygon has exactly three point pairs
    auto at = svg3.find("poly-rel-2");
    REQUIRE(at != std::string::npos);
    auto pts = svg3.find("points=\"", at);
    auto end = svg3.find('"', pts + 8);
    std::string coords = svg3.substr(pts + 8, end - pts - 8);
    CHECK(count_occurrences(coords, ",") == 3);

    std::string svg0 = render_svg(make(2, {}));
    CHECK(count_occurrences(svg0, "<polyline id=\"curve-") == 3);
    CHECK(count_occurrences(svg0, "<circle id=\"pt-") == 2);
    CHECK(count_occurrences(svg0, "poly-") == 0);
}

TEST_SUITE_END();
