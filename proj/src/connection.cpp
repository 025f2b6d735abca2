#include "weblab/connection.hpp"

#include <algorithm>
#include <map>

namespace weblab {

namespace {

// Raw jet coordinate d_x^a d_y^b (b_j); formal partials commute, so the
// (a, b) pair identifies the coordinate.
struct JetKey {
    int j, a, b;
    bool operator<(const JetKey& o) const {
        return std::tie(j, a, b) < std::tie(o.j, o.a, o.b);
    }
};

// Equation: sparse series-linear combination of raw jets.
using LinJet = std::map<JetKey, Series>;

void add_term(LinJet& e, const JetKey& k, const Series& c) {
    auto it = e.find(k);
    if (it == e.end())
        e.emplace(k, c);
    else
        it->second += c;
}

LinJet derive_equation(const LinJet& e, bool in_x) {
    LinJet out;
    for (const auto& [key, c] : e) {
        JetKey shifted = in_x ? JetKey{key.j, key.a + 1, key.b} : JetKey{key.j, key.a, key.b + 1};
        add_term(out, shifted, c);
        add_term(out, key, in_x ? c.derive_x() : c.derive_y());
    }
    return out;
}

// Linear combination of the free staircase coordinates.
using LinComb = std::vector<Series>;

LinComb zero_comb(int pi, int order) { return LinComb(pi, Series(order)); }

void axpy(LinComb& acc, const Series& c, const LinComb& x) {
    for (size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] - c * x[i];
}

}  // namespace

JetSchema staircase_schema(int d) {
    JetSchema s;
    s.d = d;
    // Top jet first: the integrability obstruction of the prolonged system
    // sits in the component of the unique order-(d-3) coordinate, so this
    // ordering puts the curvature row first.
    for (int m = d - 3; m >= 0; --m)
        for (int j = d; j >= m + 3; --j) s.labels.push_back({j, m});
    return s;
}

Prolongation prolong(const SlopeSystem& sys) {
    const int d = sys.d();
    const int n_sys = sys.order();
    const int n_ctx = n_sys + d + 2;  // headroom for exact constants
    JetSchema schema = staircase_schema(d);
    const int pi = schema.pi();

    // Free-coordinate positions: (j, m) -> schema index.
    std::map<std::pair<int, int>, int> free_index;
    for (int l = 0; l < pi; ++l) free_index[{schema.labels[l].j, schema.labels[l].m}] = l;

    auto is_free = [&](const JetKey& k) {
        return k.a == 0 && k.b <= d - 3 && k.j >= k.b + 3;
    };

    // Base equations of M(d).
    std::vector<LinJet> base(d - 1);
    for (int r = 1; r <= d - 1; ++r) {
        LinJet e;
        int jx = d - r + 1, jy = d - r + 2;
        if (jx >= 3 && jx <= d)
            add_term(e, {jx, 1, 0}, Series::constant(Rational(1), n_ctx));
        if (jy >= 3 && jy <= d)
            add_term(e, {jy, 0, 1}, Series::constant(Rational(1), n_ctx));
        for (int j = 3; j <= d; ++j) add_term(e, {j, 0, 0}, sys.a(r, j - 2));
        base[r - 1] = e;
    }

    // All formal derivatives D^beta of the base equations, |beta| <= d-3,
    // grouped by |beta|.
    std::map<std::pair<int, int>, std::vector<LinJet>> derived;  // beta -> per-row equations
    derived[{0, 0}] = base;
    for (int ord = 1; ord <= d - 3; ++ord) {
        for (int bx = ord; bx >= 0; --bx) {
            int by = ord - bx;
            const auto& prev = bx > 0 ? derived.at({bx - 1, by}) : derived.at({bx, by - 1});
            std::vector<LinJet> cur;
            cur.reserve(prev.size());
            for (const LinJet& e : prev) cur.push_back(derive_equation(e, bx > 0));
            derived[{bx, by}] = std::move(cur);
        }
    }

    // Expressions of jets in the free coordinates, solved level by level.
    std::map<JetKey, LinComb> expr;
    for (int l = 0; l < pi; ++l) {
        LinComb unit = zero_comb(pi, n_ctx);
        unit[l] = Series::constant(Rational(1), n_ctx);
        expr[{schema.labels[l].j, 0, schema.labels[l].m}] = std::move(unit);
    }

    for (int q = 1; q <= d - 2; ++q) {
        // Unknowns: dependent jets of order exactly q.
        std::vector<JetKey> unknowns;
        for (int a = 0; a <= q; ++a)
            for (int j = 3; j <= d; ++j) {
                JetKey k{j, a, q - a};
                if (!is_free(k)) unknowns.push_back(k);
            }
        std::map<JetKey, int> col;
        for (size_t i = 0; i < unknowns.size(); ++i) col[unknowns[i]] = static_cast<int>(i);

        // Equations: every D^beta(row) with |beta| = q-1.
        std::vector<const LinJet*> eqs;
        for (int bx = q - 1; bx >= 0; --bx)
            for (const LinJet& e : derived.at({bx, q - 1 - bx})) eqs.push_back(&e);

        const int nu = static_cast<int>(unknowns.size());
        if (static_cast<int>(eqs.size()) != nu)
            raise(ErrorCode::DegenerateProlongation,
                  "prolongation level " + std::to_string(q) + " is not square");

        // Constant top-order block and LinComb right-hand sides.
        std::vector<std::vector<Rational>> m(nu, std::vector<Rational>(nu));
        std::vector<LinComb> rhs(nu, zero_comb(pi, n_ctx));
        for (int row = 0; row < nu; ++row) {
            for (const auto& [key, c] : *eqs[row]) {
                int ord = key.a + key.b;
                if (ord == q) {
                    Rational c0 = c.constant_term();
                    if (!(c - Series::constant(c0, c.order())).is_zero())
                        raise(ErrorCode::Internal, "top-order jet with non-constant coefficient");
                    if (c0.is_zero()) continue;
                    if (is_free(key)) {
                        int l = free_index.at({key.j, key.b});
                        rhs[row][l] -= Series::constant(c0, n_ctx);
                    } else {
                        m[row][col.at(key)] += c0;
                    }
                } else {
                    auto it = expr.find(key);
                    if (it == expr.end())
                        raise(ErrorCode::Internal, "lower-order jet has no expression yet");
                    axpy(rhs[row], c, it->second);
                }
            }
        }

        // Rational Gaussian elimination, carrying the LinComb right sides.
        std::vector<int> perm(nu);
        for (int i = 0; i < nu; ++i) perm[i] = i;
        for (int c0 = 0; c0 < nu; ++c0) {
            int piv = -1;
            for (int i = c0; i < nu; ++i)
                if (!m[i][c0].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                raise(ErrorCode::DegenerateProlongation,
                      "prolongation level " + std::to_string(q) + " has a singular jet block");
            std::swap(m[piv], m[c0]);
            std::swap(rhs[piv], rhs[c0]);
            Rational inv = m[c0][c0].inverse();
            for (int jj = c0; jj < nu; ++jj) m[c0][jj] *= inv;
            for (auto& s : rhs[c0]) s = s.scaled(inv);
            for (int i = 0; i < nu; ++i) {
                if (i == c0 || m[i][c0].is_zero()) continue;
                Rational f = m[i][c0];
                for (int jj = c0; jj < nu; ++jj) m[i][jj] -= f * m[c0][jj];
                for (size_t kk = 0; kk < rhs[i].size(); ++kk)
                    rhs[i][kk] -= rhs[c0][kk].scaled(f);
            }
        }
        for (int i = 0; i < nu; ++i) expr[unknowns[i]] = std::move(rhs[i]);
    }

    // gamma rows: d(phi_i) = -gamma f.
    Prolongation out{schema, SeriesMatrix(pi, pi, n_ctx), SeriesMatrix(pi, pi, n_ctx)};
    for (int i = 0; i < pi; ++i) {
        const JetLabel& lab = schema.labels[i];
        const LinComb& ex = expr.at({lab.j, 1, lab.m});
        const LinComb& ey = expr.at({lab.j, 0, lab.m + 1});
        for (int l = 0; l < pi; ++l) {
            out.gamma_x.at(i, l) = -ex[l];
            out.gamma_y.at(i, l) = -ey[l];
        }
    }
    return out;
}

CurvatureData curvature_of(const SeriesMatrix& gamma_x, const SeriesMatrix& gamma_y) {
    SeriesMatrix k =
        gamma_y.derive_x() - gamma_x.derive_y() + gamma_x * gamma_y - gamma_y * gamma_x;
    CurvatureData out{k, {}, true};
    int pi = k.rows();
    for (int l = 0; l < pi; ++l) out.first_row.push_back(k.at(0, l));
    for (int i = 1; i < pi; ++i)
        for (int l = 0; l < pi; ++l)
            if (!k.at(i, l).is_zero()) out.full_check = false;
    return out;
}

namespace {

std::vector<int> nonzero_rows(const SeriesMatrix& k) {
    std::vector<int> rows;
    for (int i = 0; i < k.rows(); ++i) {
        bool nz = false;
        for (int l = 0; l < k.cols(); ++l)
            if (!k.at(i, l).is_zero()) nz = true;
        if (nz) rows.push_back(i);
    }
    return rows;
}

void swap_basis(Prolongation& p, int i0) {
    std::swap(p.schema.labels[0], p.schema.labels[i0]);
    for (auto* g : {&p.gamma_x, &p.gamma_y}) {
        for (int c = 0; c < g->cols(); ++c) std::swap(g->at(0, c), g->at(i0, c));
        for (int r = 0; r < g->rows(); ++r) std::swap(g->at(r, 0), g->at(r, i0));
    }
}

// Unipotent gauge g' = T g T^-1 - dT T^-1 with T^-1 = I + (v - e_1) e_1^T,
// chosen so the curvature image lands in the first coordinate line.
bool unipotent_repair(Prolongation& p, const SeriesMatrix& k, std::string& note) {
    const int pi = k.rows();
    // Column with the most significant entry.
    int j0 = -1, i0 = -1, best_val = 0;
    for (int j = 0; j < pi; ++j)
        for (int i = 0; i < pi; ++i) {
            int v = k.at(i, j).valuation();
            if (v < k.at(i, j).order() && (j0 < 0 || v < best_val)) {
                j0 = j;
                i0 = i;
                best_val = v;
            }
        }
    if (j0 < 0) return true;  // curvature zero at precision, nothing to do
    if (i0 != 0) {
        swap_basis(p, i0);
        note += "swapped basis rows 1<->" + std::to_string(i0 + 1) + "; ";
    }
    SeriesMatrix kk = curvature_of(p.gamma_x, p.gamma_y).full;
    int order = kk.working_order();
    std::vector<Series> v;
    v.push_back(Series::constant(Rational(1), order));
    for (int i = 1; i < pi; ++i) {
        // v_i = K(i, j0) / K(1, j0); the repair fails if not divisible.
        try {
            v.push_back(divide_exact(kk.at(i, j0), kk.at(0, j0)));
        } catch (const Error&) {
            return false;
        }
    }
    SeriesMatrix t_inv = SeriesMatrix::identity(pi, order);
    SeriesMatrix t = SeriesMatrix::identity(pi, order);
    for (int i = 1; i < pi; ++i) {
        t_inv.at(i, 0) = v[i];
        t.at(i, 0) = -v[i];
    }
    p.gamma_x = t * p.gamma_x * t_inv - t.derive_x() * t_inv;
    p.gamma_y = t * p.gamma_y * t_inv - t.derive_y() * t_inv;
    note += "unipotent column repair applied; ";
    return true;
}

}  // namespace

ConnectionData build_connection_from_system(const SlopeSystem& sys) {
    return finalize_connection(prolong(sys));
}

ConnectionData finalize_connection(Prolongation p) {
    CurvatureData k = curvature_of(p.gamma_x, p.gamma_y);
    bool repaired = false;
    std::string note;

    if (!k.full_check) {
        std::vector<int> rows = nonzero_rows(k.full);
        if (rows.size() == 1 && rows[0] != 0) {
            swap_basis(p, rows[0]);
            note = "curvature row moved from " + std::to_string(rows[0] + 1) + " to 1; ";
            repaired = true;
            k = curvature_of(p.gamma_x, p.gamma_y);
        } else {
            repaired = unipotent_repair(p, k.full, note);
            if (repaired) k = curvature_of(p.gamma_x, p.gamma_y);
        }
        if (!k.full_check)
            raise(ErrorCode::AdaptedBasisViolation,
                  "curvature has entries outside the first row after repair (" + note + ")");
    }

    ConnectionData c{p.schema, p.gamma_x, p.gamma_y, k.first_row,
                     k.full.trace(), k.full_check, repaired, note};
    return c;
}

ConnectionData build_connection(const WebPresentation& w) {
    return build_connection_from_system(derive_system(w));
}

Series blaschke_chern_trace(const ConnectionData& c) {
    // k_1 is the only possible diagonal entry of the adapted curvature; the
    // independently computed trace must agree.
    Series diff = c.trace - c.k.front();
    if (!diff.is_zero())
        raise(ErrorCode::Internal, "trace of the curvature disagrees with k_1");
    return c.k.front();
}

std::vector<Series> horizontal_vector(const JetSchema& schema, const AbelianCandidate& c) {
    std::vector<Series> f;
    f.reserve(schema.labels.size());
    for (const JetLabel& lab : schema.labels) {
        Series s = c.of(lab.j);
        for (int k = 0; k < lab.m; ++k) s = s.derive_y();
        f.push_back(s);
    }
    return f;
}

LinearizabilityReport linearizability_d4(const ConnectionData& c, const PwPolynomial& p) {
    if (c.schema.d != 4)
        raise(ErrorCode::Internal, "linearizability residuals are for d = 4");
    Series kappa = c.k[0].scaled(Rational(1, 3));
    Series l1 = c.k[1] - kappa.derive_x().scaled(Rational(3));
    Series l2 = c.k[2] - kappa.derive_y().scaled(Rational(3));
    bool gate = linearizability_degree_gate(p);
    LinearizabilityReport rep{kappa, l1, l2, gate,
                              gate && l1.is_zero() && l2.is_zero()};
    return rep;
}

}  // namespace weblab
