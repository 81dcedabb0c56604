#include "symdec/codes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symdec {

namespace {

struct FaceSpec {
    int fr;
    int fc;
    bool z_type;
    bool boundary;
    std::vector<size_t> corners;
};

void require_odd_d(int d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("code size d must be odd and >= 3");
    }
}

}  // namespace

StabilizerCode build_surface_code(int d) {
    require_odd_d(d);
    StabilizerCode code;
    code.family = CodeFamily::surface;
    code.n = static_cast<size_t>(d) * static_cast<size_t>(d);
    code.lattice_size = d;
    auto qubit = [d](int r, int c) { return static_cast<size_t>(r * d + c); };

    code.qubit_coords.resize(code.n);
    for (int r = 0; r < d; r++) {
        for (int c = 0; c < d; c++) {
            code.qubit_coords[qubit(r, c)] = {static_cast<double>(r), static_cast<double>(c)};
        }
    }

    std::vector<FaceSpec> faces;
    for (int fr = 0; fr <= d - 2; fr++) {
        for (int fc = 0; fc <= d - 2; fc++) {
            FaceSpec f{fr, fc, (fr + fc) % 2 == 0, false,
                       {qubit(fr, fc), qubit(fr, fc + 1), qubit(fr + 1, fc),
                        qubit(fr + 1, fc + 1)}};
            faces.push_back(std::move(f));
        }
    }
    // Weight-two faces continue the bulk checkerboard past the lattice edge:
    // X-type round faces on the top/bottom boundaries, Z-type on left/right.
    for (int fc = 0; fc <= d - 2; fc += 2) {
        faces.push_back({-1, fc, false, true, {qubit(0, fc), qubit(0, fc + 1)}});
    }
    for (int fc = 1; fc <= d - 2; fc += 2) {
        faces.push_back({d - 1, fc, false, true, {qubit(d - 1, fc), qubit(d - 1, fc + 1)}});
    }
    for (int fr = 1; fr <= d - 2; fr += 2) {
        faces.push_back({fr, -1, true, true, {qubit(fr, 0), qubit(fr + 1, 0)}});
    }
    for (int fr = 0; fr <= d - 2; fr += 2) {
        faces.push_back({fr, d - 1, true, true, {qubit(fr, d - 1), qubit(fr + 1, d - 1)}});
    }

    std::sort(faces.begin(), faces.end(), [](const FaceSpec& a, const FaceSpec& b) {
        if (a.z_type != b.z_type) return a.z_type;  // Z-type generators first
        if (a.fr != b.fr) return a.fr < b.fr;
        return a.fc < b.fc;
    });

    for (const FaceSpec& f : faces) {
        PauliString g(code.n);
        for (size_t q : f.corners) {
            g.set(q, f.z_type ? Pauli::Z : Pauli::X);
        }
        code.generators.push_back(std::move(g));
        code.face_meta.push_back({f.fr + 0.5, f.fc + 0.5, f.z_type, f.boundary, 0});
    }

    PauliString logical_z(code.n);
    PauliString logical_x(code.n);
    for (int c = 0; c < d; c++) {
        logical_z.set(qubit(0, c), Pauli::Z);
    }
    for (int r = 0; r < d; r++) {
        logical_x.set(qubit(r, 0), Pauli::X);
    }
    code.logical_pairs.emplace_back(std::move(logical_x), std::move(logical_z));

    BoundarySegment top{BoundaryKind::x_type, "top", {}};
    BoundarySegment bottom{BoundaryKind::x_type, "bottom", {}};
    BoundarySegment left{BoundaryKind::z_type, "left", {}};
    BoundarySegment right{BoundaryKind::z_type, "right", {}};
    for (int c = 0; c < d; c++) {
        top.qubits.push_back(qubit(0, c));
        bottom.qubits.push_back(qubit(d - 1, c));
    }
    for (int r = 0; r < d; r++) {
        left.qubits.push_back(qubit(r, 0));
        right.qubits.push_back(qubit(r, d - 1));
    }
    code.boundaries = {top, bottom, left, right};

    code.finalize();
    return code;
}

StabilizerCode build_xzzx_code(int d) {
    require_odd_d(d);
    StabilizerCode code;
    code.family = CodeFamily::xzzx;
    code.n = static_cast<size_t>(d) * static_cast<size_t>(d);
    code.lattice_size = d;
    code.periodic_rows = true;
    code.periodic_cols = true;
    auto qubit = [d](int r, int c) {
        return static_cast<size_t>(((r % d + d) % d) * d + ((c % d + d) % d));
    };

    code.qubit_coords.resize(code.n);
    for (int r = 0; r < d; r++) {
        for (int c = 0; c < d; c++) {
            code.qubit_coords[qubit(r, c)] = {static_cast<double>(r), static_cast<double>(c)};
        }
    }

    for (int fr = 0; fr < d; fr++) {
        for (int fc = 0; fc < d; fc++) {
            PauliString g(code.n);
            g.set(qubit(fr, fc), Pauli::X);
            g.set(qubit(fr, fc + 1), Pauli::Z);
            g.set(qubit(fr + 1, fc), Pauli::Z);
            g.set(qubit(fr + 1, fc + 1), Pauli::X);
            code.generators.push_back(std::move(g));
            code.face_meta.push_back(
                {fr + 0.5, fc + 0.5, false, false, ((fr - fc) % d + d) % d});
        }
    }

    // Pure-Z logical along a lattice diagonal; pure-X along an anti-diagonal.
    PauliString logical_z(code.n);
    PauliString logical_x(code.n);
    for (int t = 0; t < d; t++) {
        logical_z.set(qubit(t, t), Pauli::Z);
        logical_x.set(qubit(t, (d - t) % d), Pauli::X);
    }
    code.logical_pairs.emplace_back(std::move(logical_x), std::move(logical_z));

    code.boundaries = {{BoundaryKind::periodic, "rows", {}},
                       {BoundaryKind::periodic, "cols", {}}};

    code.finalize();
    return code;
}

StabilizerCode build_toric_code(int L) {
    if (L < 2) {
        throw std::invalid_argument("toric code needs L >= 2");
    }
    StabilizerCode code;
    code.family = CodeFamily::toric;
    code.n = 2 * static_cast<size_t>(L) * static_cast<size_t>(L);
    code.lattice_size = L;
    code.periodic_rows = true;
    code.periodic_cols = true;
    auto wrap = [L](int v) { return (v % L + L) % L; };
    auto h_edge = [&](int r, int c) { return static_cast<size_t>(wrap(r) * L + wrap(c)); };
    auto v_edge = [&](int r, int c) {
        return static_cast<size_t>(L * L + wrap(r) * L + wrap(c));
    };

    code.qubit_coords.resize(code.n);
    for (int r = 0; r < L; r++) {
        for (int c = 0; c < L; c++) {
            code.qubit_coords[h_edge(r, c)] = {static_cast<double>(r), c + 0.5};
            code.qubit_coords[v_edge(r, c)] = {r + 0.5, static_cast<double>(c)};
        }
    }

    for (int r = 0; r < L; r++) {
        for (int c = 0; c < L; c++) {
            PauliString plaq(code.n);
            plaq.set(h_edge(r, c), Pauli::Z);
            plaq.set(h_edge(r + 1, c), Pauli::Z);
            plaq.set(v_edge(r, c), Pauli::Z);
            plaq.set(v_edge(r, c + 1), Pauli::Z);
            code.generators.push_back(std::move(plaq));
            code.face_meta.push_back({r + 0.5, c + 0.5, true, false, 0});
        }
    }
    for (int r = 0; r < L; r++) {
        for (int c = 0; c < L; c++) {
            PauliString star(code.n);
            star.set(h_edge(r, c), Pauli::X);
            star.set(h_edge(r, c - 1), Pauli::X);
            star.set(v_edge(r, c), Pauli::X);
            star.set(v_edge(r - 1, c), Pauli::X);
            code.generators.push_back(std::move(star));
            code.face_meta.push_back({static_cast<double>(r), static_cast<double>(c), false,
                                      false, 0});
        }
    }

    // First pair: horizontal Z cycle / crossing X cycle on horizontal edges.
    PauliString lz1(code.n), lx1(code.n), lz2(code.n), lx2(code.n);
    for (int c = 0; c < L; c++) {
        lz1.set(h_edge(0, c), Pauli::Z);
        lx2.set(v_edge(0, c), Pauli::X);
    }
    for (int r = 0; r < L; r++) {
        lx1.set(h_edge(r, 0), Pauli::X);
        lz2.set(v_edge(r, 0), Pauli::Z);
    }
    code.logical_pairs.emplace_back(std::move(lx1), std::move(lz1));
    code.logical_pairs.emplace_back(std::move(lx2), std::move(lz2));

    code.boundaries = {{BoundaryKind::periodic, "rows", {}},
                       {BoundaryKind::periodic, "cols", {}}};

    code.finalize();
    return code;
}

StabilizerCode build_repetition_code(int d) {
    if (d < 2) {
        throw std::invalid_argument("repetition code needs d >= 2");
    }
    StabilizerCode code;
    code.family = CodeFamily::repetition;
    code.n = static_cast<size_t>(d);
    code.lattice_size = d;

    code.qubit_coords.resize(code.n);
    for (int i = 0; i < d; i++) {
        code.qubit_coords[static_cast<size_t>(i)] = {0.0, static_cast<double>(i)};
    }
    for (int i = 0; i + 1 < d; i++) {
        PauliString g(code.n);
        g.set(static_cast<size_t>(i), Pauli::Z);
        g.set(static_cast<size_t>(i + 1), Pauli::Z);
        code.generators.push_back(std::move(g));
        code.face_meta.push_back({0.0, i + 0.5, true, false, 0});
    }

    PauliString lz = PauliString::single(code.n, 0, Pauli::Z);
    PauliString lx(code.n);
    for (int i = 0; i < d; i++) {
        lx.set(static_cast<size_t>(i), Pauli::X);
    }
    code.logical_pairs.emplace_back(std::move(lx), std::move(lz));

    code.boundaries = {{BoundaryKind::x_type, "left", {0}},
                       {BoundaryKind::x_type, "right", {code.n - 1}}};

    code.finalize();
    return code;
}

namespace {

// Visits all w-subsets of {0..n-1}; f returns true to stop early.
template <typename F>
bool for_each_combination(size_t n, size_t w, F&& f) {
    if (w > n) return false;
    std::vector<size_t> idx(w);
    for (size_t i = 0; i < w; i++) idx[i] = i;
    while (true) {
        if (f(idx)) return true;
        size_t i = w;
        while (i > 0) {
            i--;
            if (idx[i] != i + n - w) {
                idx[i]++;
                for (size_t j = i + 1; j < w; j++) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
        if (w == 0) return false;
    }
}

bool is_logical_operator(const StabilizerCode& code, const PauliString& p) {
    for (const PauliString& g : code.generators) {
        if (!commutes(p, g)) return false;
    }
    return !code.in_stabilizer_group(p);
}

bool any_logical_of_weight(const StabilizerCode& code, size_t w, DistanceSearch search) {
    auto try_pure = [&](Pauli label) {
        return for_each_combination(code.n, w, [&](const std::vector<size_t>& qs) {
            PauliString p(code.n);
            for (size_t q : qs) p.set(q, label);
            return is_logical_operator(code, p);
        });
    };
    switch (search) {
        case DistanceSearch::pure_x:
            return try_pure(Pauli::X);
        case DistanceSearch::pure_z:
            return try_pure(Pauli::Z);
        case DistanceSearch::css_pure:
            return try_pure(Pauli::X) || try_pure(Pauli::Z);
        default:
            break;
    }
    // Full Pauli search: every label assignment over the support.
    return for_each_combination(code.n, w, [&](const std::vector<size_t>& qs) {
        size_t assignments = 1;
        for (size_t i = 0; i < w; i++) assignments *= 3;
        static const Pauli kLabels[3] = {Pauli::X, Pauli::Z, Pauli::Y};
        for (size_t a = 0; a < assignments; a++) {
            PauliString p(code.n);
            size_t rest = a;
            for (size_t q : qs) {
                p.set(q, kLabels[rest % 3]);
                rest /= 3;
            }
            if (is_logical_operator(code, p)) return true;
        }
        return false;
    });
}

}  // namespace

CodeParameters code_parameters(const StabilizerCode& code, size_t max_search_weight,
                               DistanceSearch search) {
    if (search == DistanceSearch::automatic) {
        search = code.is_css() ? DistanceSearch::css_pure : DistanceSearch::all_paulis;
    }
    CodeParameters out;
    out.n = code.n;
    out.k = code.k();
    for (size_t w = 1; w <= max_search_weight; w++) {
        if (any_logical_of_weight(code, w, search)) {
            out.d = w;
            out.exact = true;
            return out;
        }
    }
    out.d = max_search_weight;
    out.exact = false;
    return out;
}

PauliString hadamard_on(const PauliString& p, const std::vector<bool>& selected) {
    PauliString out = p;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        if (!selected[q]) continue;
        Pauli label = p.at(q);
        if (label == Pauli::X) out.set(q, Pauli::Z);
        if (label == Pauli::Z) out.set(q, Pauli::X);
    }
    return out;
}

std::vector<bool> even_sublattice(const StabilizerCode& code) {
    std::vector<bool> selected(code.n, false);
    for (size_t q = 0; q < code.n; q++) {
        long r = std::lround(code.qubit_coords[q].row);
        long c = std::lround(code.qubit_coords[q].col);
        selected[q] = ((r + c) % 2 + 2) % 2 == 0;
    }
    return selected;
}

}  // namespace symdec
