#include "treelift/digraph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "treelift/errors.hpp"

namespace treelift {

int VertexSet::count() const {
    return std::popcount(bits);
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (int v = 0; v < 64; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

std::string VertexSet::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int v : members()) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    os << "}";
    return os.str();
}

bool canonical_subset_less(const VertexSet& a, const VertexSet& b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a.members() < b.members();
}

Digraph::Digraph(int n) : n_(n) {
    if (n <= 0) throw DomainError("graph needs at least one vertex");
    if (n > (1 << 20)) throw DomainError("graph too large");
    labels_.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
    diag_.assign(static_cast<std::size_t>(n), Weight());
}

Digraph::Digraph(int n, std::vector<Edge> edges, std::vector<Weight> diagonal,
                 std::optional<std::vector<Weight>> vertex_weights,
                 std::vector<std::string> labels)
    : Digraph(n) {
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n) throw DomainError("label count mismatch");
        labels_ = std::move(labels);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        check_vertex(e.from);
        check_vertex(e.to);
        if (e.from == e.to) throw DomainError("self-loop in edge list");
        if (i > 0 && edges[i - 1].from == e.from && edges[i - 1].to == e.to)
            throw DomainError("duplicate edge");
    }
    edges_ = std::move(edges);
    if (!diagonal.empty()) {
        if (static_cast<int>(diagonal.size()) != n) throw DomainError("diagonal size mismatch");
        diag_ = std::move(diagonal);
    }
    if (vertex_weights) {
        if (static_cast<int>(vertex_weights->size()) != n)
            throw DomainError("vertex weight size mismatch");
        vweights_ = std::move(vertex_weights);
    }
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex index out of range");
}

void Digraph::add_edge(int u, int v, Weight w) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop in edge list");
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                               [](const Edge& e, const std::pair<int, int>& key) {
                                   return std::pair(e.from, e.to) < key;
                               });
    if (it != edges_.end() && it->from == u && it->to == v)
        throw DomainError("duplicate edge");
    edges_.insert(it, Edge{u, v, std::move(w)});
}

void Digraph::set_diagonal(int v, Weight w) {
    check_vertex(v);
    diag_[static_cast<std::size_t>(v)] = std::move(w);
}

void Digraph::set_vertex_weight(int v, Weight w) {
    check_vertex(v);
    if (!vweights_) vweights_.emplace(static_cast<std::size_t>(n_), Weight());
    (*vweights_)[static_cast<std::size_t>(v)] = std::move(w);
}

void Digraph::set_label(int v, std::string label) {
    check_vertex(v);
    labels_[static_cast<std::size_t>(v)] = std::move(label);
}

Weight Digraph::vertex_weight(int v) const {
    check_vertex(v);
    if (!vweights_) return Weight();
    return (*vweights_)[static_cast<std::size_t>(v)];
}

std::span<const Edge> Digraph::out_edges(int v) const {
    auto lo = std::lower_bound(edges_.begin(), edges_.end(), v,
                               [](const Edge& e, int key) { return e.from < key; });
    auto hi = std::lower_bound(lo, edges_.end(), v + 1,
                               [](const Edge& e, int key) { return e.from < key; });
    return {edges_.data() + (lo - edges_.begin()), static_cast<std::size_t>(hi - lo)};
}

const Weight* Digraph::edge_weight(int u, int v) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                               [](const Edge& e, const std::pair<int, int>& key) {
                                   return std::pair(e.from, e.to) < key;
                               });
    if (it == edges_.end() || it->from != u || it->to != v) return nullptr;
    return &it->w;
}

std::string edge_var_name(int u, int v) {
    return "x_" + std::to_string(u) + "_" + std::to_string(v);
}

std::string vertex_var_name(int v) {
    return "y_" + std::to_string(v);
}

std::string diag_var_name(int v) {
    return "d_" + std::to_string(v);
}

namespace {

bool is_identifier(std::string_view t) {
    if (t.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(t[0])) && t[0] != '_') return false;
    for (char c : t)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Weight parse_weight(const std::string& token, const std::string& sym_name, int line_no) {
    if (token == "sym") return Weight::variable(sym_name);
    if (is_identifier(token)) return Weight::variable(token);
    try {
        return Weight(Rational::parse(token));
    } catch (const ParseError&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad weight '" + token + "'");
    }
}

int parse_index(const std::string& token, int n, int line_no) {
    std::size_t used = 0;
    int v = -1;
    try {
        v = std::stoi(token, &used);
    } catch (...) {
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex '" + token + "'");
    }
    if (used != token.size() || v < 0 || v >= n)
        throw ParseError("line " + std::to_string(line_no) + ": vertex index " + token +
                         " out of range");
    return v;
}

} // namespace

Digraph Digraph::parse(std::string_view text) {
    std::optional<Digraph> g;
    std::vector<bool> diag_seen, vw_seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive)) continue;
        std::vector<std::string> args;
        std::string tok;
        while (ls >> tok) args.push_back(tok);
        auto want = [&](std::size_t k) {
            if (args.size() != k)
                throw ParseError("line " + std::to_string(line_no) + ": '" + directive +
                                 "' expects " + std::to_string(k) + " arguments");
        };
        if (directive == "graph") {
            want(1);
            if (g) throw ParseError("line " + std::to_string(line_no) + ": repeated graph line");
            int n = 0;
            try {
                n = std::stoi(args[0]);
            } catch (...) {
                throw ParseError("line " + std::to_string(line_no) + ": bad vertex count");
            }
            if (n <= 0 || n > (1 << 20))
                throw ParseError("line " + std::to_string(line_no) + ": bad vertex count");
            g.emplace(n);
            diag_seen.assign(static_cast<std::size_t>(n), false);
            vw_seen.assign(static_cast<std::size_t>(n), false);
            continue;
        }
        if (!g)
            throw ParseError("line " + std::to_string(line_no) +
                             ": 'graph <n>' must come first");
        int n = g->vertex_count();
        if (directive == "edge") {
            want(3);
            int u = parse_index(args[0], n, line_no);
            int v = parse_index(args[1], n, line_no);
            if (u == v)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": self-loop; use 'diag' for self-transitions");
            Weight w = parse_weight(args[2], edge_var_name(u, v), line_no);
            try {
                g->add_edge(u, v, std::move(w));
            } catch (const DomainError&) {
                throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " +
                                 args[0] + " " + args[1]);
            }
        } else if (directive == "diag") {
            want(2);
            int v = parse_index(args[0], n, line_no);
            if (diag_seen[static_cast<std::size_t>(v)])
                throw ParseError("line " + std::to_string(line_no) + ": repeated diag " + args[0]);
            diag_seen[static_cast<std::size_t>(v)] = true;
            g->set_diagonal(v, parse_weight(args[1], diag_var_name(v), line_no));
        } else if (directive == "vweight") {
            want(2);
            int v = parse_index(args[0], n, line_no);
            if (vw_seen[static_cast<std::size_t>(v)])
                throw ParseError("line " + std::to_string(line_no) + ": repeated vweight " +
                                 args[0]);
            vw_seen[static_cast<std::size_t>(v)] = true;
            g->set_vertex_weight(v, parse_weight(args[1], vertex_var_name(v), line_no));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" +
                             directive + "'");
        }
    }
    if (!g) throw ParseError("no 'graph <n>' line found");
    return *std::move(g);
}

namespace {

std::string weight_token(const Weight& w) {
    if (w.is_constant()) return w.constant_value().str();
    if (w.term_count() == 1 && w.variables().size() == 1) {
        const auto& [exps, c] = *w.terms().begin();
        if (exps[0] == 1 && c.is_one()) return w.variables()[0];
    }
    throw DomainError("weight '" + w.str() + "' has no single-token form");
}

} // namespace

std::string Digraph::serialize() const {
    std::ostringstream os;
    os << "graph " << n_ << "\n";
    for (const Edge& e : edges_)
        os << "edge " << e.from << " " << e.to << " " << weight_token(e.w) << "\n";
    for (int v = 0; v < n_; ++v)
        if (!diag_[static_cast<std::size_t>(v)].is_zero())
            os << "diag " << v << " " << weight_token(diag_[static_cast<std::size_t>(v)]) << "\n";
    if (vweights_)
        for (int v = 0; v < n_; ++v)
            os << "vweight " << v << " " << weight_token((*vweights_)[static_cast<std::size_t>(v)])
               << "\n";
    return os.str();
}

namespace {

// Forward reach within mask via out-edges, or backward via in-edges.
std::uint64_t reach(const Digraph& g, int start, std::uint64_t mask, bool forward) {
    std::uint64_t seen = 1ull << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const Edge& e : g.edges()) {
            int a = forward ? e.from : e.to;
            int b = forward ? e.to : e.from;
            if (a != u) continue;
            std::uint64_t bit = 1ull << b;
            if (!(mask & bit) || (seen & bit)) continue;
            seen |= bit;
            stack.push_back(b);
        }
    }
    return seen & mask;
}

} // namespace

VertexSet reachable_set(const Digraph& g, int start, VertexSet within, bool forward) {
    if (!within.contains(start)) throw DomainError("reachable_set: start outside the subset");
    return VertexSet(reach(g, start, within.bits, forward));
}

VertexSet scc_containing(const Digraph& g, int v, VertexSet within) {
    return reachable_set(g, v, within, true) & reachable_set(g, v, within, false);
}

bool is_strongly_connected_subset(const Digraph& g, VertexSet w) {
    if (w.empty()) return false;
    int start = std::countr_zero(w.bits);
    return reach(g, start, w.bits, true) == w.bits && reach(g, start, w.bits, false) == w.bits;
}

bool is_strongly_connected(const Digraph& g) {
    if (g.vertex_count() > 64)
        throw CapExceeded("connectivity analysis supports at most 64 vertices");
    return is_strongly_connected_subset(g, VertexSet::full(g.vertex_count()));
}

Digraph induced_subgraph(const Digraph& g, VertexSet w) {
    if (w.empty()) throw DomainError("induced subgraph of the empty set");
    if (g.vertex_count() > 64)
        throw CapExceeded("subset machinery supports at most 64 vertices");
    std::vector<int> verts = w.members();
    std::vector<int> newidx(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) newidx[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    Digraph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        out.set_label(static_cast<int>(i), g.labels()[static_cast<std::size_t>(verts[i])]);
        out.set_diagonal(static_cast<int>(i), g.diagonal(verts[i]));
    }
    if (g.has_vertex_weights())
        for (std::size_t i = 0; i < verts.size(); ++i)
            out.set_vertex_weight(static_cast<int>(i), g.vertex_weight(verts[i]));
    for (const Edge& e : g.edges())
        if (w.contains(e.from) && w.contains(e.to))
            out.add_edge(newidx[static_cast<std::size_t>(e.from)],
                         newidx[static_cast<std::size_t>(e.to)], e.w);
    return out;
}

std::vector<VertexSet> strongly_connected_subsets(const Digraph& g) {
    int n = g.vertex_count();
    if (n > 20) throw CapExceeded("subset enumeration beyond 20 vertices");
    std::vector<VertexSet> out;
    for (std::uint64_t m = 1; m < (1ull << n); ++m) {
        VertexSet w(m);
        if (w.count() == 1 || is_strongly_connected_subset(g, w)) out.push_back(w);
    }
    std::sort(out.begin(), out.end(), canonical_subset_less);
    return out;
}

const Weight* WalkSupportTable::get(int len, VertexSet support) const {
    auto it = entries.find({len, support});
    return it == entries.end() ? nullptr : &it->second;
}

Weight WalkSupportTable::total(int len) const {
    Weight acc;
    for (const auto& [key, w] : entries)
        if (key.first == len) acc += w;
    return acc;
}

WalkSupportTable closed_walk_support_sums(const Digraph& g, int max_len) {
    if (max_len < 1) throw DomainError("walk length must be at least 1");
    int n = g.vertex_count();
    if (n > 16 || max_len > 24)
        throw CapExceeded("walk support table too large (2^|V| * |V|^2 * maxLen)");
    WalkSupportTable table;
    table.max_len = max_len;
    // step weight v -> u: edge weight off-diagonal, diagonal for u == v
    auto step = [&](int v, int u) -> const Weight* {
        if (u == v) {
            const Weight& d = g.diagonal(v);
            return d.is_zero() ? nullptr : &d;
        }
        return g.edge_weight(v, u);
    };
    for (int b = 0; b < n; ++b) {
        // dp[(current, visited)] = weight sum of b->...->current walks
        std::map<std::pair<int, std::uint64_t>, Weight> dp;
        dp[{b, 1ull << b}] = Weight(1);
        for (int len = 1; len <= max_len; ++len) {
            std::map<std::pair<int, std::uint64_t>, Weight> nx;
            for (const auto& [key, acc] : dp) {
                auto [v, visited] = key;
                for (int u = 0; u < n; ++u) {
                    const Weight* w = step(v, u);
                    if (!w) continue;
                    nx[{u, visited | (1ull << u)}] += acc * *w;
                }
            }
            dp = std::move(nx);
            for (const auto& [key, acc] : dp) {
                auto [v, visited] = key;
                if (v != b) continue;
                table.entries[{len, VertexSet(visited)}] += acc;
            }
        }
    }
    for (auto it = table.entries.begin(); it != table.entries.end();)
        it = it->second.is_zero() ? table.entries.erase(it) : std::next(it);
    return table;
}

RingMatrix weight_matrix(const Digraph& g) {
    RingMatrix m(g.labels());
    for (const Edge& e : g.edges())
        m.at(static_cast<std::size_t>(e.from), static_cast<std::size_t>(e.to)) = e.w;
    for (int v = 0; v < g.vertex_count(); ++v)
        m.at(static_cast<std::size_t>(v), static_cast<std::size_t>(v)) = g.diagonal(v);
    return m;
}

bool is_symbolic(const Digraph& g) {
    for (const Edge& e : g.edges())
        if (!e.w.is_constant()) return true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.diagonal(v).is_constant()) return true;
        if (g.has_vertex_weights() && !g.vertex_weight(v).is_constant()) return true;
    }
    return false;
}

bool is_row_stochastic(const Digraph& g) {
    if (is_symbolic(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        Rational sum = g.diagonal(v).constant_value();
        if (sum.sign() < 0) return false;
        for (const Edge& e : g.out_edges(v)) {
            Rational w = e.w.constant_value();
            if (w.sign() < 0) return false;
            sum += w;
        }
        if (!sum.is_one()) return false;
    }
    return true;
}

Digraph with_unit_weights(const Digraph& g) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({e.from, e.to, Weight(1)});
    return Digraph(g.vertex_count(), std::move(edges), {}, std::nullopt, g.labels());
}

Digraph with_symbolic_weights(const Digraph& g) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        edges.push_back({e.from, e.to, Weight::variable(edge_var_name(e.from, e.to))});
    std::vector<Weight> diag(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.diagonal(v).is_zero()) diag[static_cast<std::size_t>(v)] = Weight::variable(diag_var_name(v));
    std::optional<std::vector<Weight>> vw;
    if (g.has_vertex_weights()) {
        vw.emplace();
        for (int v = 0; v < g.vertex_count(); ++v)
            vw->push_back(Weight::variable(vertex_var_name(v)));
    }
    return Digraph(g.vertex_count(), std::move(edges), std::move(diag), std::move(vw), g.labels());
}

Digraph with_random_rational_weights(const Digraph& g, Prng& rng, std::uint64_t lo,
                                     std::uint64_t hi) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({e.from, e.to, Weight(rng.rational(lo, hi))});
    std::vector<Weight> diag(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.diagonal(v).is_zero()) diag[static_cast<std::size_t>(v)] = Weight(rng.rational(lo, hi));
    return Digraph(g.vertex_count(), std::move(edges), std::move(diag), std::nullopt, g.labels());
}

Digraph with_row_stochastic_weights(const Digraph& g, Prng& rng, bool with_diagonal) {
    std::vector<Edge> edges;
    std::vector<Weight> diag(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto outs = g.out_edges(v);
        std::vector<Rational> draws;
        for (std::size_t i = 0; i < outs.size(); ++i) draws.push_back(Rational(static_cast<long>(rng.range(1, 20))));
        Rational d(0);
        if (with_diagonal || outs.empty()) d = Rational(static_cast<long>(rng.range(1, 10)));
        Rational sum = d;
        for (const auto& x : draws) sum += x;
        for (std::size_t i = 0; i < outs.size(); ++i)
            edges.push_back({outs[i].from, outs[i].to, Weight(draws[i] / sum)});
        diag[static_cast<std::size_t>(v)] = Weight(d / sum);
    }
    return Digraph(g.vertex_count(), std::move(edges), std::move(diag), std::nullopt, g.labels());
}

Digraph evaluate_weights(const Digraph& g, const std::map<std::string, Rational>& assignment) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        edges.push_back({e.from, e.to, Weight(e.w.evaluate(assignment))});
    std::vector<Weight> diag;
    for (int v = 0; v < g.vertex_count(); ++v)
        diag.push_back(Weight(g.diagonal(v).evaluate(assignment)));
    std::optional<std::vector<Weight>> vw;
    if (g.has_vertex_weights()) {
        vw.emplace();
        for (int v = 0; v < g.vertex_count(); ++v)
            vw->push_back(Weight(g.vertex_weight(v).evaluate(assignment)));
    }
    return Digraph(g.vertex_count(), std::move(edges), std::move(diag), std::move(vw), g.labels());
}

} // namespace treelift
