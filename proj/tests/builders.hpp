#ifndef TREELIFT_TESTS_BUILDERS_HPP
#define TREELIFT_TESTS_BUILDERS_HPP

#include "treelift/digraph.hpp"

namespace builders {

using namespace treelift;

// directed n-cycle 0 -> 1 -> ... -> 0 with unit weights
inline Digraph cycle(int n) {
    Digraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n, Weight(1));
    return g;
}

// complete digraph with unit weights
inline Digraph complete(int n) {
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) g.add_edge(u, v, Weight(1));
    return g;
}

// uniform chain on the complete digraph K3: every transition 1/2
inline Digraph uniform_k3() {
    Digraph g(3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            if (u != v) g.add_edge(u, v, Weight(Rational(1, 2)));
    return g;
}

inline Weight var(const std::string& name) {
    return Weight::variable(name);
}

inline Weight q(long num, long den = 1) {
    return Weight(Rational(num, den));
}

} // namespace builders

#endif
