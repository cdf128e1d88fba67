#include "koszul/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "koszul/dual.hpp"

namespace koszul {

namespace {

// Order of sequence indices 1..l along the curve: odd-start sides walk the
// odd indices up and the even ones back down; even-start sides mirror that.
std::vector<int> side_index_order(int l, bool odd_first) {
    std::vector<int> order;
    for (int i = odd_first ? 1 : 2; i <= l; i += 2) order.push_back(i);
    int down_parity = odd_first ? 0 : 1;
    int start = l;
    if (start >= 1 && start % 2 != down_parity) --start;
    for (int i = start; i >= 1; i -= 2) order.push_back(i);
    return order;
}

}  // namespace

MarkedCurve marked_order(const SequenceTable& seqs, int p) {
    if (p < 0 || p > seqs.n()) throw std::out_of_range("marked_order: vertex out of range");
    MarkedCurve c;
    c.index = p;
    const auto& dag = seqs.dagger(p);
    for (int i : side_index_order(dag.length(), /*odd_first=*/true))
        c.dagger_side.push_back({dag.at(i), p});
    const auto& pl = seqs.plain(p);
    for (int i : side_index_order(pl.length(), /*odd_first=*/false))
        c.plain_side.push_back({p, pl.at(i)});
    return c;
}

MarkedCurve marked_order(const RelationPattern& pat, int p) {
    SequenceTable seqs(pat);
    return marked_order(seqs, p);
}

PolygonWord relation_polygon(const SequenceTable& seqs, int j) {
    const auto& pat = seqs.pattern();
    if (j < 1 || j > pat.size())
        throw std::out_of_range("relation_polygon: relation index out of range");
    const Relation& r = pat.relation(j - 1);
    PolygonWord w;
    w.edges.push_back({r.s, r.t, r.s + 1});
    for (int c = r.s + 1; c < r.t; ++c) w.edges.push_back({c, c - 1, c + 1});
    w.edges.push_back({r.t, r.t - 1, r.s});
    for (int c = r.s + 1; c <= r.t; ++c) w.vertices.push_back({c, c - 1});
    w.vertices.push_back({r.t, r.s});

    // Adjacency validation: on each edge's curve, restricted to crossings
    // with curves inside [s, t], the two endpoints are consecutive.
    for (const auto& e : w.edges) {
        MarkedCurve mc = marked_order(seqs, e.curve);
        std::vector<MarkedPoint> in_range;
        for (const auto& pt : mc.all()) {
            int other = pt.j == e.curve ? pt.i : pt.j;
            if (other >= r.s && other <= r.t) in_range.push_back(pt);
        }
        auto find = [&](int other) {
            for (std::size_t k = 0; k < in_range.size(); ++k) {
                int o = in_range[k].j == e.curve ? in_range[k].i : in_range[k].j;
                if (o == other) return static_cast<int>(k);
            }
            return -1;
        };
        int ka = find(e.end_a), kb = find(e.end_b);
        if (ka < 0 || kb < 0 || std::abs(ka - kb) != 1)
            throw std::logic_error("relation_polygon: edge on curve " +
                                   std::to_string(e.curve) +
                                   " is not a consecutive segment");
    }
    return w;
}

PolygonWord relation_polygon(const RelationPattern& pat, int j) {
    SequenceTable seqs(pat);
    return relation_polygon(seqs, j);
}

std::vector<AdmissibleChain> admissible_chains(const SequenceTable& seqs,
                                               const GradedBasisCategory& dual) {
    std::vector<AdmissibleChain> out;
    int n = seqs.n();
    // grow descending vertex tuples (i_l > i_{l-1} > ... > i_0) from each top
    std::vector<int> desc;
    auto emit = [&](const std::vector<int>& verts) {
        int l = static_cast<int>(verts.size()) - 1;
        int top = verts.front(), bottom = verts.back();
        auto out_idx = seqs.plain_index(top, bottom);
        if (!out_idx) return;
        int deg_sum = 0;
        for (int r = 0; r + 1 <= l; ++r)
            deg_sum += *seqs.plain_index(verts[r], verts[r + 1]);
        if (deg_sum + 2 - l != *out_idx) return;
        AdmissibleChain ch;
        ch.vertices.assign(verts.rbegin(), verts.rend());  // ascending i_0 < ... < i_l
        GradedBasisCategory::Key key;  // (a_l, ..., a_1), a_1 = top step
        for (int r = l - 1; r >= 0; --r) {
            auto m = dual.find_morphism(eta_label(verts[r], verts[r + 1]));
            if (!m) throw std::logic_error("admissible_chains: dual is missing " +
                                           eta_label(verts[r], verts[r + 1]));
            key.push_back(*m);
        }
        ch.value = dual.mu_eval(key);
        out.push_back(std::move(ch));
    };
    auto walk = [&](auto&& self) -> void {
        if (desc.size() >= 3) emit(desc);
        const auto& seq = seqs.plain(desc.back());
        for (int i = 1; i <= seq.length(); ++i) {
            desc.push_back(seq.at(i));
            self(self);
            desc.pop_back();
        }
    };
    for (int p = n; p >= 0; --p) {
        desc.assign(1, p);
        walk(walk);
    }
    std::sort(out.begin(), out.end(), [](const AdmissibleChain& a, const AdmissibleChain& b) {
        if (a.arity() != b.arity()) return a.arity() < b.arity();
        return a.vertices < b.vertices;
    });
    return out;
}

namespace {

struct Placed {
    int x = 0, y = 0;
};

}  // namespace

std::string render_svg(const RelationPattern& pat, const DiagramLayout& layout) {
    SequenceTable seqs(pat);
    int n = pat.n();
    GradedBasisCategory dual = build_dual(seqs, kDefaultConvention);
    auto chains = admissible_chains(seqs, dual);

    std::vector<MarkedCurve> curves;
    curves.reserve(n + 1);
    for (int p = 0; p <= n; ++p) curves.push_back(marked_order(seqs, p));

    // Row per curve (top row = curve n); each point q(j,i) is placed on the
    // row of the lower curve i, at the slot given by its dagger-side order.
    auto row_y = [&](int c) { return layout.margin + (n - c) * layout.strand_pitch; };
    auto home_x = [&](int c) { return layout.margin + c * layout.column_pitch; };
    std::map<std::pair<int, int>, Placed> pos;  // (j, i) -> position
    std::map<int, Placed> root;
    int width = 0;
    for (int c = 0; c <= n; ++c) {
        root[c] = {home_x(c), row_y(c)};
        for (std::size_t k = 0; k < curves[c].dagger_side.size(); ++k) {
            const auto& pt = curves[c].dagger_side[k];
            Placed pl{home_x(c) + (static_cast<int>(k) + 1) * layout.point_pitch, row_y(c)};
            pos[{pt.j, pt.i}] = pl;
            width = std::max(width, pl.x);
        }
        width = std::max(width, home_x(c));
    }
    width += layout.margin + layout.point_pitch;
    int height = layout.margin * 2 + n * layout.strand_pitch;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";

    // shaded relation polygons
    for (int j = 1; j <= pat.size(); ++j) {
        PolygonWord w = relation_polygon(seqs, j);
        svg << "  <polygon id=\"poly-rel-" << j << "\" points=\"";
        for (std::size_t k = 0; k < w.vertices.size(); ++k) {
            const auto& pl = pos.at({w.vertices[k].j, w.vertices[k].i});
            if (k) svg << " ";
            svg << pl.x << "," << pl.y;
        }
        svg << "\" fill=\"#c8d8f0\" stroke=\"none\"/>\n";
    }

    // curve strands
    for (int c = 0; c <= n; ++c) {
        svg << "  <polyline id=\"curve-" << c << "\" points=\"";
        svg << root[c].x << "," << root[c].y;
        for (const auto& pt : curves[c].all()) {
            const auto& pl = pos.at({pt.j, pt.i});
            svg << " " << pl.x << "," << pl.y;
        }
        svg << "\" fill=\"none\" stroke=\"#303030\" stroke-width=\"1\"/>\n";
    }

    // outlined admissible-chain polygons
    for (const auto& ch : chains) {
        svg << "  <polygon id=\"poly-chain";
        for (int v : ch.vertices) svg << "-" << v;
        svg << "\" points=\"";
        bool first = true;
        const auto& v = ch.vertices;
        int l = ch.arity();
        for (int r = 1; r <= l; ++r) {
            const auto& pl = pos.at({v[r], v[r - 1]});
            if (!first) svg << " ";
            svg << pl.x << "," << pl.y;
            first = false;
        }
        const auto& pl = pos.at({v[l], v[0]});
        svg << " " << pl.x << "," << pl.y;
        svg << "\" fill=\"none\" stroke=\"#b03030\" stroke-width=\"1\" "
               "stroke-dasharray=\"4 2\"/>\n";
    }

    // marked points and roots
    for (int c = 0; c <= n; ++c) {
        svg << "  <circle id=\"root-" << c << "\" cx=\"" << root[c].x << "\" cy=\""
            << root[c].y << "\" r=\"" << layout.point_radius
            << "\" fill=\"#ffffff\" stroke=\"#303030\"/>\n";
    }
    for (const auto& [ji, pl] : pos) {
        svg << "  <circle id=\"pt-" << ji.first << "-" << ji.second << "\" cx=\""
            << pl.x << "\" cy=\"" << pl.y << "\" r=\"" << layout.point_radius
            << "\" fill=\"#303030\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace koszul
