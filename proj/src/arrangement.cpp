#include "mbs/arrangement.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mbs {

namespace {

VecZ primitive_direction(const VecZ& v) {
    VecZ p = rescale_to_integral(to_vecq(v)).first;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (p[i] < 0)
            for (auto& y : p) y = -y;
        break;
    }
    return p;
}

std::string span_key(const std::vector<VecQ>& span, size_t dim) {
    if (span.empty()) return "0";
    MatQ m = MatQ::from_rows(span).rref();
    std::ostringstream os;
    size_t nonzero_rows = 0;
    for (size_t i = 0; i < m.rows(); ++i) {
        bool zero = true;
        for (size_t j = 0; j < dim; ++j)
            if (!m.at(i, j).is_zero()) zero = false;
        if (zero) continue;
        ++nonzero_rows;
        for (size_t j = 0; j < dim; ++j) os << m.at(i, j).str() << ",";
        os << ";";
    }
    return nonzero_rows ? os.str() : "0";
}

bool lex_less(const VecZ& a, const VecZ& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

} // namespace

System::System(size_t rank, std::vector<VecZ> phi, ZeroPolicy zp)
    : rank_(rank), phi_(std::move(phi)) {
    for (const auto& v : phi_) {
        if (v.size() != rank_) throw ValidationError("phi vector dimension mismatch");
        if (is_zero_vec(v)) {
            if (zp == ZeroPolicy::forbid)
                throw ValidationError("zero vector in phi");
            has_zero_ = true;
        }
    }
    std::vector<VecZ> nz;
    for (const auto& v : phi_)
        if (!is_zero_vec(v)) nz.push_back(v);
    spans_ = (rank_of_z(nz) == rank_);

    if (!spans_ || rank_ == 0) return;

    // distinct directions, each mapped to the first phi index realizing it
    std::vector<std::pair<VecZ, size_t>> dirs;
    for (size_t i = 0; i < phi_.size(); ++i) {
        if (is_zero_vec(phi_[i])) continue;
        VecZ p = primitive_direction(phi_[i]);
        bool seen = false;
        for (const auto& [d, idx] : dirs)
            if (d == p) { seen = true; break; }
        if (!seen) dirs.emplace_back(p, i);
    }
    size_t n = dirs.size();
    std::map<VecZ, Wall, bool (*)(const VecZ&, const VecZ&)> found(lex_less);
    if (rank_ == 1) {
        // the only hyperplane is {0}, spanned by the empty set
        Wall w;
        w.e = VecZ{1};
        found.emplace(w.e, w);
    } else {
        // enumerate (rank-1)-subsets of distinct directions
        std::vector<size_t> idx(rank_ - 1);
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        while (true) {
            std::vector<VecQ> span;
            std::vector<size_t> phi_idx;
            for (auto k : idx) {
                span.push_back(to_vecq(dirs[k].first));
                phi_idx.push_back(dirs[k].second);
            }
            if (rank_of(span) == rank_ - 1) {
                VecZ e = primitive_equation(span, rank_);
                if (!found.count(e)) {
                    Wall w;
                    w.span_idx = phi_idx;
                    w.e = e;
                    found.emplace(e, w);
                }
            }
            // next combination
            size_t i = idx.size();
            while (i > 0) {
                --i;
                if (idx[i] + (idx.size() - i) < n) {
                    ++idx[i];
                    for (size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) { i = n + 1; break; }
            }
            if (i == n + 1 || idx.empty()) break;
        }
    }
    for (auto& [e, w] : found) walls_.push_back(std::move(w));
}

std::vector<size_t> System::nonzero_idx() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < phi_.size(); ++i)
        if (!is_zero_vec(phi_[i])) out.push_back(i);
    return out;
}

const std::vector<Wall>& System::walls() const {
    if (!spans_) throw ValidationError("phi does not span V; walls undefined");
    return walls_;
}

bool is_regular(const System& sys, const VecQ& v) {
    if (v.size() != sys.rank()) throw ValidationError("point dimension mismatch");
    for (const auto& w : sys.walls())
        if (dot_zq(w.e, v).is_integer()) return false;
    return true;
}

Tope tope_of(const System& sys, const VecQ& v) {
    const auto& ws = sys.walls();
    Tope t;
    t.witness = v;
    t.key.reserve(ws.size());
    for (const auto& w : ws) {
        Rat p = dot_zq(w.e, v);
        if (p.is_integer())
            throw GenericityError("point lies on affine wall " + vecz_str(w.e) + " = " +
                                  p.str());
        t.key.push_back(p.floor());
    }
    return t;
}

std::vector<AdmissibleSubspace> admissible_subspaces(const System& sys) {
    size_t r = sys.rank();
    std::vector<std::pair<VecZ, size_t>> dirs;
    for (size_t i = 0; i < sys.phi().size(); ++i) {
        if (is_zero_vec(sys.phi()[i])) continue;
        VecZ p = primitive_direction(sys.phi()[i]);
        bool seen = false;
        for (const auto& [d, idx] : dirs)
            if (d == p) { seen = true; break; }
        if (!seen) dirs.emplace_back(p, i);
    }
    size_t n = dirs.size();
    if (n > 20) throw ValidationError("too many distinct directions for enumeration");
    std::map<std::string, AdmissibleSubspace> found;
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        std::vector<VecQ> span;
        std::vector<size_t> members;
        for (size_t k = 0; k < n; ++k)
            if (mask & (size_t(1) << k)) {
                span.push_back(to_vecq(sys.phi()[dirs[k].second]));
                members.push_back(dirs[k].second);
            }
        std::string key = span_key(span, r);
        if (found.count(key)) continue;
        AdmissibleSubspace s;
        // greedy independent subset as the stored basis
        std::vector<VecQ> basis;
        for (size_t k = 0; k < members.size(); ++k) {
            basis.push_back(to_vecq(sys.phi()[members[k]]));
            if (rank_of(basis) == basis.size()) {
                s.basis_idx.push_back(members[k]);
            } else {
                basis.pop_back();
            }
        }
        s.dim = basis.size();
        s.chart = subspace_chart(basis, r);
        found.emplace(key, std::move(s));
    }
    std::vector<AdmissibleSubspace> out;
    for (auto& [k, s] : found) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(),
              [&](const AdmissibleSubspace& a, const AdmissibleSubspace& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  std::vector<VecQ> sa, sb;
                  for (auto i : a.basis_idx) sa.push_back(to_vecq(sys.phi()[i]));
                  for (auto i : b.basis_idx) sb.push_back(to_vecq(sys.phi()[i]));
                  return span_key(sa, sys.rank()) < span_key(sb, sys.rank());
              });
    return out;
}

WallData wall_data(const System& sys, size_t wall_index) {
    const Wall& w = sys.walls().at(wall_index);
    WallData d;
    std::vector<VecQ> span;
    for (auto i : w.span_idx) span.push_back(to_vecq(sys.phi()[i]));
    d.chart = subspace_chart(span, sys.rank());
    if (d.chart.dim != sys.rank() - 1)
        throw ValidationError("internal: wall chart dimension mismatch");
    std::vector<VecZ> sub_phi;
    for (size_t i = 0; i < sys.phi().size(); ++i) {
        const auto& p = sys.phi()[i];
        if (is_zero_vec(p)) continue;
        if (dot_zz(w.e, p) == 0) {
            d.on_idx.push_back(i);
            sub_phi.push_back(d.chart.chart_rows.apply(p));
        } else {
            d.off_idx.push_back(i);
        }
    }
    d.subsystem = System(sys.rank() - 1, std::move(sub_phi), System::ZeroPolicy::allow);
    d.preimage = lattice_preimage(w.e, Int(1));
    return d;
}

FacetWitness facet_witness(const System& sys, const Tope& t1, const Tope& t2) {
    const auto& ws = sys.walls();
    if (t1.key.size() != ws.size() || t2.key.size() != ws.size())
        throw ValidationError("tope key size mismatch");
    size_t diff_at = ws.size();
    for (size_t i = 0; i < ws.size(); ++i) {
        if (t1.key[i] == t2.key[i]) continue;
        Int gap = abs(t1.key[i] - t2.key[i]);
        if (gap != 1 || diff_at != ws.size())
            throw ValidationError("topes are not adjacent");
        diff_at = i;
    }
    if (diff_at == ws.size()) throw ValidationError("topes are equal");

    const Wall& w = ws[diff_at];
    Int m = std::max(t1.key[diff_at], t2.key[diff_at]);
    WallData wd = wall_data(sys, diff_at);

    auto project = [&](VecQ p) {
        Rat shift = (Rat(m) - dot_zq(w.e, p)) / Rat(dot_zz(w.e, w.e));
        for (size_t i = 0; i < p.size(); ++i) p[i] += shift * Rat(w.e[i]);
        return p;
    };
    std::vector<VecQ> centers;
    centers.push_back(project(vec_scale(Rat(1, 2), vec_add(t1.witness, t2.witness))));
    {
        // crossing point of the witness segment with the affine wall
        Rat a = dot_zq(w.e, t1.witness), b = dot_zq(w.e, t2.witness);
        Rat t = (Rat(m) - a) / (b - a);
        centers.push_back(vec_add(t1.witness, vec_scale(t, vec_sub(t2.witness, t1.witness))));
    }

    auto acceptable = [&](const VecQ& p) {
        for (size_t i = 0; i < ws.size(); ++i) {
            if (i == diff_at) continue;
            Rat pr = dot_zq(ws[i].e, p);
            if (!(Rat(t1.key[i]) < pr && pr < Rat(t1.key[i] + 1))) return false;
        }
        VecQ reduced = p;
        for (size_t i = 0; i < reduced.size(); ++i) reduced[i] -= Rat(m * wd.preimage[i]);
        VecQ c = wd.chart.chart_rows.apply(reduced);
        if (wd.subsystem.rank() == 0) return true;
        return is_regular(wd.subsystem, c);
    };

    for (const auto& center : centers) {
        if (acceptable(center)) return {diff_at, center};
        for (int k = 1; k <= 40; ++k) {
            for (int sign : {+1, -1}) {
                VecQ cand = center;
                Rat eps(1, 2);
                for (int shift = 0; shift < k; ++shift) eps *= Rat(1, 2);
                Rat step = eps;
                for (size_t i = 0; i < wd.chart.basis.size(); ++i) {
                    for (size_t j = 0; j < cand.size(); ++j)
                        cand[j] += Rat(sign) * step * Rat(wd.chart.basis[i][j]);
                    step *= Rat(1, 2);
                }
                if (acceptable(cand)) return {diff_at, cand};
            }
        }
    }
    throw ValidationError("degenerate facet between topes");
}

} // namespace mbs
