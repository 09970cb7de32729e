#include <iostream>
#include <map>

#include "surflink/surface_map.hpp"

using namespace surflink;

namespace {
enum Port { N = 0, W = 1, S = 2, E = 3 };
int grid_id(int c, int r) { return 6 * c + r; }
DartId gd(int c, int r, int port) { return 4 * grid_id(c, r) + port; }
const char* pname(int p) { return (const char*[]){"N", "W", "S", "E"}[p]; }
}  // namespace

int main(int argc, char** argv) {
    bool t2 = argc > 1 && std::string(argv[1]) == "t2";
    int V = t2 ? 120 : 72;
    std::vector<DartId> alpha(4 * V, -1);
    auto link = [&](DartId a, DartId b) {
        if (alpha[a] != -1 || alpha[b] != -1) {
            std::cout << "DOUBLE WIRE at " << a << "," << b << "\n";
            exit(1);
        }
        alpha[a] = b;
        alpha[b] = a;
    };
    for (int c = 0; c <= 4; ++c)
        for (int r = 0; r < 6; ++r) link(gd(c, r, E), gd(c + 1, r, W));
    for (int c = 6; c <= 10; ++c)
        for (int r = 0; r < 6; ++r) link(gd(c, r, W), gd(c + 1, r, E));
    for (int i = 0; i < 6; ++i) link(gd(5, i, E), gd(6, 5 - i, E));
    for (int j = 0; j < 6; ++j) link(gd(11, j, W), gd(0, 5 - j, W));
    for (int c = 0; c < 12; ++c)
        for (int r = 0; r <= 4; ++r) link(gd(c, r, S), gd(c, r + 1, N));

    auto t_dart = [](int k, int m, int port) { return 4 * (72 + 6 * k + m) + port; };
    auto da = [](int j, int port) { return 4 * (108 + j) + port; };
    auto db = [](int j, int port) { return 4 * (114 + j) + port; };
    for (int rho = 1; rho <= 3; ++rho) {
        int a = 3 - rho, e1 = 2 + rho, e2 = 9 - rho, w2 = 8 + rho;
        if (!t2) {
            link(gd(a, 5, S), gd(w2, 0, N));
            link(gd(w2, 5, S), gd(e2, 5, S));
            link(gd(e2, 0, N), gd(e1, 5, S));
            link(gd(e1, 0, N), gd(a, 0, N));
        } else {
            int mw = 3 - rho, me = 2 + rho;
            link(gd(a, 5, S), t_dart(0, mw, N));
            for (int k = 0; k <= 4; ++k) link(t_dart(k, mw, S), t_dart(k + 1, mw, N));
            link(t_dart(5, mw, S), gd(w2, 0, N));
            link(gd(e1, 5, S), t_dart(0, me, N));
            for (int k = 0; k <= 4; ++k) link(t_dart(k, me, S), t_dart(k + 1, me, N));
            link(t_dart(5, me, S), gd(e2, 0, N));
            link(gd(a, 0, N), da(3 - rho, W));
            link(da(3 - rho, E), da(2 + rho, W));
            link(da(2 + rho, E), gd(e1, 0, N));
            link(gd(w2, 5, S), db(2 + rho, W));
            link(db(2 + rho, E), db(3 - rho, W));
            link(db(3 - rho, E), gd(e2, 5, S));
        }
    }
    if (t2) {
        for (int k = 0; k < 6; ++k)
            for (int m = 0; m <= 4; ++m) link(t_dart(k, m, E), t_dart(k, m + 1, W));
        link(da(0, S), da(1, N));
        link(da(1, S), da(2, N));
        link(da(2, S), da(3, S));
        link(da(3, N), da(4, S));
        link(da(4, N), da(5, S));
        link(db(0, N), db(1, S));
        link(db(1, N), db(2, S));
        link(db(2, N), db(3, N));
        link(db(3, S), db(4, N));
        link(db(4, S), db(5, N));
        link(t_dart(1, 5, E), t_dart(2, 0, W));
        link(t_dart(2, 5, E), t_dart(1, 0, W));
        link(t_dart(3, 5, E), t_dart(4, 0, W));
        link(t_dart(4, 5, E), t_dart(3, 0, W));
        link(da(5, N), t_dart(0, 0, W));
        link(t_dart(0, 5, E), da(0, N));
        link(t_dart(5, 5, E), db(0, S));
        link(db(5, S), t_dart(5, 0, W));
    }
    for (DartId d = 0; d < 4 * V; ++d)
        if (alpha[d] == -1) {
            std::cout << "UNWIRED " << d << " = crossing " << d / 4 << " port "
                      << pname(d % 4) << "\n";
            return 1;
        }

    std::vector<DartId> sigma(4 * V);
    for (int v = 0; v < V; ++v)
        for (int i = 0; i < 4; ++i) sigma[4 * v + i] = 4 * v + (i + 1) % 4;

    // Alternating solve with diagnostics.
    {
        std::vector<int> bit(V, -1);
        bit[0] = 0;
        std::vector<int> stack = {0};
        bool ok = true;
        while (!stack.empty() && ok) {
            int v = stack.back();
            stack.pop_back();
            for (int i = 0; i < 4; ++i) {
                DartId d = 4 * v + i;
                DartId a2 = alpha[d];
                int w = a2 / 4;
                int need = 1 ^ (i % 2) ^ (a2 % 4 % 2) ^ bit[v];
                if (bit[w] == -1) {
                    bit[w] = need;
                    stack.push_back(w);
                } else if (bit[w] != need) {
                    std::cout << "ALTERNATION CONFLICT at edge " << d << "-" << a2
                              << " (crossings " << v << "," << w << ")\n";
                    ok = false;
                    break;
                }
            }
        }
        std::cout << "alternating solvable: " << ok << "\n";
    }

    DiagramOnSurface m = build_map(sigma, alpha, std::vector<bool>(V, true));
    std::map<size_t, int> lens;
    for (const auto& w : m.face_walks()) lens[w.size()]++;
    std::cout << "genus(all-disc) " << m.genus() << " walks " << m.face_walks().size()
              << "\n";
    for (auto [l, n] : lens) std::cout << "  length " << l << ": " << n << "\n";
    // Walks through the predicted pants darts.
    for (DartId d : {gd(11, 0, W), gd(0, 5, S), gd(5, 5, E), gd(6, 0, N), gd(0, 0, N)}) {
        int w = m.walk_of_dart(d);
        std::cout << "walk of dart " << d << " (X" << d / 4 << " " << pname(d % 4)
                  << "): walk " << w << " length " << m.face_walks()[w].size() << ":";
        for (DartId x : m.face_walks()[w])
            std::cout << " X" << x / 4 << "." << pname(x % 4);
        std::cout << "\n";
    }
    return 0;
}
