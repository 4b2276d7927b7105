#include "wbc/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace wbc {

WalledDiagram WalledDiagram::identity(int r, int t) {
    WalledDiagram d;
    d.r = r;
    d.t = t;
    d.match.assign(2 * (r + t), -1);
    for (int i = 0; i < r + t; i++) d.link(i, r + t + i);
    return d;
}

void WalledDiagram::validate() const {
    if ((int)match.size() != 2 * N()) throw ShapeError("diagram: wrong vertex count");
    for (int v = 0; v < 2 * N(); v++) {
        int p = match[v];
        if (p < 0 || p >= 2 * N() || p == v || match[p] != v)
            throw ShapeError("diagram: not a perfect matching");
        if (is_top(v) == is_top(p)) {
            // horizontal: must join unbarred to barred within one row
            if (is_barred(v) == is_barred(p))
                throw ShapeError("diagram: horizontal edge does not cross the wall");
        } else {
            // vertical: must stay on one side of the wall
            if (is_barred(v) != is_barred(p))
                throw ShapeError("diagram: vertical edge crosses the wall");
        }
    }
}

int WalledDiagram::horizontal_count() const {
    int f = 0;
    for (int i = 0; i < r; i++)
        if (is_top(match[top_u(i)])) f++;
    return f;
}

WalledDiagram diagram_s(int r, int t, int i) {
    if (i < 1 || i >= r) throw Error("s index out of range");
    WalledDiagram d = WalledDiagram::identity(r, t);
    d.link(d.top_u(i - 1), d.bot_u(i));
    d.link(d.top_u(i), d.bot_u(i - 1));
    return d;
}

WalledDiagram diagram_sb(int r, int t, int j) {
    if (j < 1 || j >= t) throw Error("sbar index out of range");
    WalledDiagram d = WalledDiagram::identity(r, t);
    d.link(d.top_b(j - 1), d.bot_b(j));
    d.link(d.top_b(j), d.bot_b(j - 1));
    return d;
}

WalledDiagram diagram_e1(int r, int t) {
    if (r < 1 || t < 1) throw Error("e_1 requires r >= 1 and t >= 1");
    WalledDiagram d = WalledDiagram::identity(r, t);
    d.link(d.top_u(0), d.top_b(0));
    d.link(d.bot_u(0), d.bot_b(0));
    return d;
}

ComposeResult compose(const WalledDiagram& a, const WalledDiagram& b) {
    if (a.r != b.r || a.t != b.t) throw ShapeError("compose: diagram shape mismatch");
    int N = a.N();
    WalledDiagram out;
    out.r = a.r;
    out.t = a.t;
    out.match.assign(2 * N, -1);

    // Nodes: a-top (boundary), a-bottom / b-top (interface, glued), b-bottom
    // (boundary).  Walk from each boundary vertex through the interface,
    // marking interface pairs met along the way.
    std::vector<bool> interface_used(N, false);
    auto walk_mark = [&](bool from_a, int v) -> int {
        bool in_a = from_a;
        int cur = v;
        for (;;) {
            int p = in_a ? a.match[cur] : b.match[cur];
            if (in_a) {
                if (a.is_top(p)) return p;
                interface_used[p - N] = true;
                cur = p - N; // a-bottom k glues to b-top k
                in_a = false;
            } else {
                if (!b.is_top(p)) return p;
                interface_used[p] = true;
                cur = p + N;
                in_a = true;
            }
        }
    };

    for (int v = 0; v < N; v++) { // a's top row
        if (out.match[v] != -1) continue;
        out.link(v, walk_mark(true, v));
    }
    for (int v = N; v < 2 * N; v++) { // b's bottom row
        if (out.match[v] != -1) continue;
        out.link(v, walk_mark(false, v));
    }

    // Loops: interface cycles not touched by any boundary path.
    int loops = 0;
    std::vector<bool> seen(N, false);
    for (int k = 0; k < N; k++) {
        if (interface_used[k] || seen[k]) continue;
        // follow the cycle through interface pair k
        int cur = k;
        bool in_a = true; // start by following a from a-bottom k
        int start = k;
        do {
            seen[cur] = true;
            int p = in_a ? a.match[cur + N] : b.match[cur];
            // p is an interface node again (otherwise this path would have
            // been marked from the boundary)
            int next = in_a ? p - N : p;
            seen[next] = true;
            cur = next;
            in_a = !in_a;
        } while (!(cur == start && in_a));
        loops++;
    }
    return {out, loops};
}

static Perm s_range_perm(int n, int a, int b) {
    // s_{a,b}, 1-based: a<b: a -> b, x in (a,b] -> x-1; a>b: a -> b,
    // x in [b,a) -> x+1; a=b: identity.
    Perm p(n);
    if (a < b) {
        p.img[a - 1] = b - 1;
        for (int x = a + 1; x <= b; x++) p.img[x - 1] = x - 2;
    } else if (a > b) {
        p.img[a - 1] = b - 1;
        for (int x = b; x < a; x++) p.img[x - 1] = x;
    }
    return p;
}

Perm dword_perm_u(const DWordData& d, int r) {
    Perm p(r);
    for (int k = d.f(); k >= 1; k--) p = p.then(s_range_perm(r, k, d.i[k - 1]));
    return p;
}

Perm dword_perm_b(const DWordData& d, int t) {
    Perm p(t);
    for (int k = d.f(); k >= 1; k--) p = p.then(s_range_perm(t, k, d.j[k - 1]));
    return p;
}

WalledDiagram recompose(int r, int t, const Factorization& fac) {
    int f = fac.f;
    Perm d1u = dword_perm_u(fac.d1, r), d1b = dword_perm_b(fac.d1, t);
    Perm d2u = dword_perm_u(fac.d2, r), d2b = dword_perm_b(fac.d2, t);
    WalledDiagram d;
    d.r = r;
    d.t = t;
    d.match.assign(2 * (r + t), -1);
    for (int k = 0; k < f; k++) {
        d.link(d.top_u(d1u(k)), d.top_b(d1b(k)));
        d.link(d.bot_u(d2u(k)), d.bot_b(d2b(k)));
    }
    for (int v = f; v < r; v++) {
        int vp = fac.wu(v - f) + f;
        d.link(d.top_u(d1u(v)), d.bot_u(d2u(vp)));
    }
    for (int v = f; v < t; v++) {
        int vp = fac.wb(v - f) + f;
        d.link(d.top_b(d1b(v)), d.bot_b(d2b(vp)));
    }
    return d;
}

// Recovers the j-tuple of a D-word from the actual barred endpoints J_k
// (0-based), inverting J_k = j_k - #{m < k : j_m >= j_k}.
static std::vector<int> dword_j_from_endpoints(const std::vector<int>& J, int t) {
    int f = (int)J.size();
    std::vector<int> j(f);
    for (int k = 0; k < f; k++) {
        int target = J[k] + 1; // 1-based
        int v = target;
        for (; v <= t; v++) {
            int drop = 0;
            for (int m = 0; m < k; m++)
                if (j[m] >= v) drop++;
            if (v - drop == target) break;
        }
        if (v > t || v < k + 1)
            throw Error("factorize: no valid D-word tuple (internal error)");
        j[k] = v;
    }
    return j;
}

Factorization factorize(const WalledDiagram& d) {
    d.validate();
    int r = d.r, t = d.t;
    Factorization fac;

    std::vector<std::pair<int, int>> top_edges, bot_edges; // (unbarred, barred), 0-based
    for (int i = 0; i < r; i++) {
        int p = d.match[d.top_u(i)];
        if (d.is_top(p)) top_edges.push_back({i, d.strand(p)});
        int q = d.match[d.bot_u(i)];
        if (!d.is_top(q)) bot_edges.push_back({i, d.strand(q)});
    }
    std::sort(top_edges.begin(), top_edges.end());
    std::sort(bot_edges.begin(), bot_edges.end());
    fac.f = (int)top_edges.size();
    if ((int)bot_edges.size() != fac.f)
        throw ShapeError("diagram: top/bottom horizontal counts differ");

    auto fill = [&](const std::vector<std::pair<int, int>>& edges, DWordData& dw) {
        std::vector<int> J;
        for (auto& [i, j] : edges) {
            dw.i.push_back(i + 1);
            J.push_back(j);
        }
        dw.j = dword_j_from_endpoints(J, t);
    };
    fill(top_edges, fac.d1);
    fill(bot_edges, fac.d2);

    Perm d1u = dword_perm_u(fac.d1, r), d2u = dword_perm_u(fac.d2, r);
    Perm d1b = dword_perm_b(fac.d1, t), d2b = dword_perm_b(fac.d2, t);
    Perm d2u_inv = d2u.inverse(), d2b_inv = d2b.inverse();
    fac.wu = Perm(r - fac.f);
    fac.wb = Perm(t - fac.f);
    for (int v = fac.f; v < r; v++) {
        int x = d1u(v);
        int y = d.match[d.top_u(x)];
        int vp = d2u_inv(d.strand(y));
        if (d.is_top(y) || d.is_barred(y) || vp < fac.f)
            throw Error("factorize: inconsistent vertical structure");
        fac.wu.img[v - fac.f] = vp - fac.f;
    }
    for (int v = fac.f; v < t; v++) {
        int x = d1b(v);
        int y = d.match[d.top_b(x)];
        int vp = d2b_inv(d.strand(y));
        if (d.is_top(y) || !d.is_barred(y) || vp < fac.f)
            throw Error("factorize: inconsistent vertical structure");
        fac.wb.img[v - fac.f] = vp - fac.f;
    }

    if (!(recompose(r, t, fac) == d))
        throw Error("factorize: round-trip failed (internal error)");
    return fac;
}

GenWord word_of_transposition(int a, int b, bool barred) {
    GenWord w;
    if (a == b) return w;
    if (a > b) std::swap(a, b);
    for (int i = a; i < b; i++) w.push_back(barred ? Gen::sb(i) : Gen::s(i));
    for (int i = b - 2; i >= a; i--) w.push_back(barred ? Gen::sb(i) : Gen::s(i));
    return w;
}

GenWord word_of_e_ij(int i, int j) {
    // e_{i,j} = (1bar, jbar)(1, i) e_1 (1, i)(1bar, jbar)
    GenWord w, tj = word_of_transposition(1, j, true), ti = word_of_transposition(1, i, false);
    w.insert(w.end(), tj.begin(), tj.end());
    w.insert(w.end(), ti.begin(), ti.end());
    w.push_back(Gen::e1());
    w.insert(w.end(), ti.begin(), ti.end());
    w.insert(w.end(), tj.begin(), tj.end());
    return w;
}

GenWord word_of_e(int k) { return word_of_e_ij(k, k); }

GenWord word_of_srange(int a, int b, bool barred) {
    // s_{a,b} as a word of adjacent transpositions
    GenWord w;
    if (a < b) {
        for (int i = a; i < b; i++) w.push_back(barred ? Gen::sb(i) : Gen::s(i));
    } else {
        for (int i = a - 1; i >= b; i--) w.push_back(barred ? Gen::sb(i) : Gen::s(i));
    }
    return w;
}

GenWord generator_word(const WalledDiagram& d) {
    Factorization fac = factorize(d);
    GenWord w;
    // d1 word, then reversed for d1^{-1}
    GenWord d1w;
    for (int k = fac.f; k >= 1; k--) {
        GenWord a = word_of_srange(k, fac.d1.i[k - 1], false);
        GenWord b = word_of_srange(k, fac.d1.j[k - 1], true);
        d1w.insert(d1w.end(), a.begin(), a.end());
        d1w.insert(d1w.end(), b.begin(), b.end());
    }
    std::reverse(d1w.begin(), d1w.end());
    w.insert(w.end(), d1w.begin(), d1w.end());
    for (int k = 1; k <= fac.f; k++) {
        GenWord e = word_of_e(k);
        w.insert(w.end(), e.begin(), e.end());
    }
    for (int q : fac.wu.adjacent_word()) w.push_back(Gen::s(fac.f + q + 1));
    for (int q : fac.wb.adjacent_word()) w.push_back(Gen::sb(fac.f + q + 1));
    for (int k = fac.f; k >= 1; k--) {
        GenWord a = word_of_srange(k, fac.d2.i[k - 1], false);
        GenWord b = word_of_srange(k, fac.d2.j[k - 1], true);
        w.insert(w.end(), a.begin(), a.end());
        w.insert(w.end(), b.begin(), b.end());
    }
    return w;
}

std::vector<DWordData> enumerate_dwords(int r, int t, int f) {
    std::vector<DWordData> out;
    if (f == 0) {
        out.push_back(DWordData{});
        return out;
    }
    if (f > r || f > t) return out;
    // choose increasing i-tuples
    std::vector<int> idx(f);
    for (int k = 0; k < f; k++) idx[k] = k + 1;
    auto next_subset = [&]() -> bool {
        int k = f - 1;
        while (k >= 0 && idx[k] == r - (f - 1 - k)) k--;
        if (k < 0) return false;
        idx[k]++;
        for (int m = k + 1; m < f; m++) idx[m] = idx[m - 1] + 1;
        return true;
    };
    std::vector<std::vector<int>> jtuples;
    std::vector<int> cur(f);
    std::function<void(int)> rec = [&](int k) {
        if (k == f) {
            jtuples.push_back(cur);
            return;
        }
        for (int v = k + 1; v <= t; v++) {
            cur[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    do {
        for (auto& j : jtuples) {
            DWordData d;
            d.i = idx;
            d.j = j;
            out.push_back(d);
        }
    } while (next_subset());
    return out;
}

std::vector<WalledDiagram> enumerate_diagrams(int r, int t) {
    std::vector<WalledDiagram> out;
    for (int f = 0; f <= std::min(r, t); f++) {
        auto dwords = enumerate_dwords(r, t, f);
        auto wus = all_perms(r - f);
        auto wbs = all_perms(t - f);
        for (auto& d1 : dwords)
            for (auto& d2 : dwords)
                for (auto& wu : wus)
                    for (auto& wb : wbs) {
                        Factorization fac{d1, d2, f, wu, wb};
                        out.push_back(recompose(r, t, fac));
                    }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- text form -------------------------------------------------------------
//
// D{1:2b; 2:1' | 1:1b}  -- top section lists every top vertex's edge once
// (bare number = vertical partner's strand, 'b' marks barred, '\'' marks
// bottom); after '|', the bottom-row horizontal edges.

std::string WalledDiagram::str() const {
    std::ostringstream out;
    out << "D{";
    bool first = true;
    std::vector<bool> done(2 * N(), false);
    auto vertex_token = [&](int v) {
        std::ostringstream o;
        o << (strand(v) + 1);
        if (is_barred(v)) o << "b";
        if (!is_top(v)) o << "'";
        return o.str();
    };
    for (int v = 0; v < N(); v++) {
        if (done[v]) continue;
        int p = match[v];
        done[v] = done[p] = true;
        if (!first) out << "; ";
        first = false;
        out << vertex_token(v) << ":" << vertex_token(p);
    }
    bool bar_written = false;
    for (int v = N(); v < 2 * N(); v++) {
        if (done[v]) continue;
        int p = match[v];
        done[v] = done[p] = true;
        out << (bar_written ? "; " : " | ");
        bar_written = true;
        out << vertex_token(v) << ":" << vertex_token(p);
    }
    out << "}";
    return out.str();
}

WalledDiagram parse_diagram(const std::string& text, int r, int t) {
    WalledDiagram d;
    d.r = r;
    d.t = t;
    d.match.assign(2 * (r + t), -1);
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) pos++;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError("diagram: expected '" + std::string(1, c) + "'");
        pos++;
    };
    // Tokens are fully explicit: `3` top unbarred, `2b` top barred,
    // `1'` bottom unbarred, `1b'` bottom barred.
    auto vertex = [&]() -> int {
        skip();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) pos++;
        if (start == pos) throw ParseError("diagram: expected vertex");
        int n = std::stoi(text.substr(start, pos - start)) - 1;
        bool barred = false, bottom = false;
        if (pos < text.size() && text[pos] == 'b') {
            barred = true;
            pos++;
        }
        if (pos < text.size() && text[pos] == '\'') {
            bottom = true;
            pos++;
        }
        if (barred) {
            if (n < 0 || n >= t) throw ParseError("diagram: barred vertex out of range");
            return bottom ? d.bot_b(n) : d.top_b(n);
        }
        if (n < 0 || n >= r) throw ParseError("diagram: vertex out of range");
        return bottom ? d.bot_u(n) : d.top_u(n);
    };
    expect('D');
    expect('{');
    for (;;) {
        skip();
        if (pos < text.size() && text[pos] == '}') {
            pos++;
            break;
        }
        if (pos < text.size() && (text[pos] == '|' || text[pos] == ';')) {
            pos++;
            continue;
        }
        int a = vertex();
        expect(':');
        int b = vertex();
        if (a == b || d.match[a] != -1 || d.match[b] != -1)
            throw ParseError("diagram: duplicate or self-paired vertex");
        d.link(a, b);
    }
    for (int v = 0; v < 2 * d.N(); v++)
        if (d.match[v] == -1) throw ParseError("diagram: missing vertices");
    d.validate();
    return d;
}

} // namespace wbc
