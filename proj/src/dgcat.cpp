#include "dgw/dgcat.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dgw {

int DgCategory::object_index(const std::string& name) const {
    for (int x = 0; x < object_count(); ++x)
        if (objects[x] == name) return x;
    throw std::invalid_argument("unknown object " + name);
}

SparseVec DgCategory::compose(int x, int y, int z, const SparseVec& g, const SparseVec& f) const {
    SparseVec out;
    for (const auto& [gi, gc] : g)
        for (const auto& [fi, fc] : f) add_scaled(out, gc * fc, compose_basis(x, y, z, gi, fi));
    return out;
}

SparseVec DgCategory::d(int x, int y, const SparseVec& f) const {
    SparseVec out;
    for (const auto& [fi, fc] : f) add_scaled(out, fc, d_basis(x, y, fi));
    return out;
}

std::optional<int> DgCategory::degree(int x, int y, const SparseVec& f) const {
    std::optional<int> deg;
    for (const auto& [fi, fc] : f) {
        int k = hom(x, y).degrees.at(fi);
        if (deg && *deg != k) return std::nullopt;
        deg = k;
    }
    return deg;
}

SparseVec star(const DgCategory& c, int x, int y, int z, const SparseVec& f, const SparseVec& g) {
    SparseVec out;
    for (const auto& [gi, gc] : g)
        for (const auto& [fi, fc] : f) {
            int s = c.hom(y, z).degrees[gi] * c.hom(x, y).degrees[fi];
            Scalar sign = s % 2 == 0 ? Scalar(1) : Scalar(-1);
            add_scaled(out, sign * gc * fc, c.compose_basis(x, y, z, gi, fi));
        }
    return out;
}

TableCategory::TableCategory(std::vector<std::string> objs)
    : objects(std::move(objs)),
      homs(objects.size(), std::vector<HomSpace>(objects.size())),
      units(objects.size()) {}

int TableCategory::add_basis(int x, int y, const std::string& name, int degree) {
    homs[x][y].names.push_back(name);
    homs[x][y].degrees.push_back(degree);
    return homs[x][y].size() - 1;
}

DgCategory TableCategory::build() const {
    DgCategory c;
    c.objects = objects;
    c.homs = homs;
    c.units = units;
    auto comp = std::make_shared<const decltype(compose)>(compose);
    auto diff = std::make_shared<const decltype(d)>(d);
    c.compose_basis = [comp](int x, int y, int z, int g, int f) {
        auto it = comp->find({x, y, z, g, f});
        return it == comp->end() ? SparseVec{} : it->second;
    };
    c.d_basis = [diff](int x, int y, int f) {
        auto it = diff->find({x, y, f});
        return it == diff->end() ? SparseVec{} : it->second;
    };
    return c;
}

namespace {

std::string basis_label(const DgCategory& c, int x, int y, int f) {
    return c.hom(x, y).names[f] + " in (" + c.objects[x] + "," + c.objects[y] + ")";
}

Scalar koszul(int a, int b) { return (a * b) % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

CheckReport check_dg_category(const DgCategory& c) {
    const int n = c.object_count();
    CheckReport r;
    if (static_cast<int>(c.homs.size()) != n || static_cast<int>(c.units.size()) != n)
        return CheckReport::fail("hom table or unit list does not match the objects");
    for (int x = 0; x < n; ++x) {
        if (!c.units[x].empty() && c.degree(x, x, c.units[x]) != 0)
            return CheckReport::fail("unit of " + c.objects[x] + " is not of degree 0");
        if (!c.d(x, x, c.units[x]).empty()) return CheckReport::fail("unit of " + c.objects[x] + " is not closed");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h = c.hom(x, y);
            for (int f = 0; f < h.size(); ++f) {
                SparseVec e = unit_vector(f);
                SparseVec df = c.d(x, y, e);
                auto dd = c.degree(x, y, df);
                if (!df.empty() && dd != h.degrees[f] + 1)
                    return CheckReport::fail("d does not raise the degree of " + basis_label(c, x, y, f));
                if (!c.d(x, y, df).empty()) return CheckReport::fail("d^2 != 0 on " + basis_label(c, x, y, f));
                if (c.compose(x, x, y, e, c.units[x]) != e || c.compose(x, y, y, c.units[y], e) != e)
                    return CheckReport::fail("unit law fails for " + basis_label(c, x, y, f));
                r.checks += 3;
            }
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const auto& hf = c.hom(x, y);
                const auto& hg = c.hom(y, z);
                for (int g = 0; g < hg.size(); ++g)
                    for (int f = 0; f < hf.size(); ++f) {
                        SparseVec eg = unit_vector(g), ef = unit_vector(f);
                        SparseVec gf = c.compose_basis(x, y, z, g, f);
                        if (!gf.empty() && c.degree(x, z, gf) != hg.degrees[g] + hf.degrees[f])
                            return CheckReport::fail("composition is not graded at " + basis_label(c, y, z, g) +
                                                     " o " + basis_label(c, x, y, f));
                        SparseVec lhs = c.d(x, z, gf);
                        SparseVec rhs = c.compose(x, y, z, c.d(y, z, eg), ef);
                        add_scaled(rhs, koszul(hg.degrees[g], 1), c.compose(x, y, z, eg, c.d(x, y, ef)));
                        if (lhs != rhs)
                            return CheckReport::fail("Leibniz rule fails at " + basis_label(c, y, z, g) + " o " +
                                                     basis_label(c, x, y, f));
                        ++r.checks;
                    }
            }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    const auto& hf = c.hom(x, y);
                    const auto& hg = c.hom(y, z);
                    const auto& hh = c.hom(z, w);
                    if (!hf.size() || !hg.size() || !hh.size()) continue;
                    for (int g = 0; g < hg.size(); ++g)
                        for (int f = 0; f < hf.size(); ++f) {
                            SparseVec gf = c.compose_basis(x, y, z, g, f);
                            for (int h = 0; h < hh.size(); ++h) {
                                SparseVec lhs = c.compose(x, z, w, unit_vector(h), gf);
                                SparseVec rhs = c.compose(x, y, w, c.compose_basis(y, z, w, h, g), unit_vector(f));
                                if (lhs != rhs)
                                    return CheckReport::fail("associativity fails at " + basis_label(c, z, w, h) +
                                                             ", " + basis_label(c, y, z, g) + ", " +
                                                             basis_label(c, x, y, f));
                                ++r.checks;
                            }
                        }
                }
    return r;
}

DgCategory opposite(const DgCategory& c) {
    DgCategory o;
    o.objects = c.objects;
    const int n = c.object_count();
    o.homs.assign(n, std::vector<HomSpace>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) o.homs[x][y] = c.homs[y][x];
    o.units = c.units;
    o.window_min = c.window_min;
    auto base = std::make_shared<const DgCategory>(c);
    // g ∘op f for f ∈ op(x,y) = c(y,x), g ∈ op(y,z) = c(z,y)
    o.compose_basis = [base](int x, int y, int z, int g, int f) {
        int s = base->hom(z, y).degrees[g] * base->hom(y, x).degrees[f];
        SparseVec v = base->compose_basis(z, y, x, f, g);
        return s % 2 == 0 ? v : scaled(v, Scalar(-1));
    };
    o.d_basis = [base](int x, int y, int f) { return base->d_basis(y, x, f); };
    return o;
}

DgCategory truncated_ginzburg_as_dgcat(const GinzburgPresentation& g) {
    struct Data {
        GinzburgPresentation g;
        std::vector<std::vector<std::vector<Path>>> basis;     // [i][j] paths i -> j
        std::vector<std::vector<std::map<Path, int>>> index;  // inverse
    };
    auto data = std::make_shared<Data>();
    data->g = g;
    const auto& t = *g.tilde;
    const int n = t.vertex_count();
    data->basis.assign(n, std::vector<std::vector<Path>>(n));
    data->index.assign(n, std::vector<std::map<Path, int>>(n));
    DgCategory c;
    c.objects = t.vertices();
    c.homs.assign(n, std::vector<HomSpace>(n));
    for (int i = 0; i < n; ++i)
        for (auto& p : g.algebra->paths_from(i)) {
            int j = p.target(t);
            data->index[i][j].emplace(p, static_cast<int>(data->basis[i][j].size()));
            c.homs[i][j].names.push_back(path_str(t, p));
            c.homs[i][j].degrees.push_back(p.degree(t));
            data->basis[i][j].push_back(std::move(p));
        }
    for (int i = 0; i < n; ++i) c.units.push_back(unit_vector(data->index[i][i].at(Path::trivial(i))));
    c.window_min = g.min_degree;
    auto coords = [data](int i, int j, const Element& e) {
        SparseVec v;
        for (const auto& [p, x] : e.terms()) add_entry(v, data->index[i][j].at(p), x);
        return v;
    };
    c.compose_basis = [data, coords](int x, int y, int z, int gi, int fi) {
        Element e(data->g.algebra);
        accumulate_product(e, data->basis[y][z][gi], data->basis[x][y][fi], Scalar(1));
        return coords(x, z, e);
    };
    c.d_basis = [data, coords](int x, int y, int f) {
        return coords(x, y, differential(data->g, data->basis[x][y][f]));
    };
    return c;
}

SparseVec DgFunctor::map(int x, int y, const SparseVec& f) const {
    SparseVec out;
    for (const auto& [fi, fc] : f) add_scaled(out, fc, map_basis(x, y, fi));
    return out;
}

DgFunctor identity_functor(const CategoryPtr& c) {
    DgFunctor f;
    f.source = c;
    f.target = c;
    for (int x = 0; x < c->object_count(); ++x) f.object_map.push_back(x);
    f.map_basis = [](int, int, int b) { return unit_vector(b); };
    return f;
}

CheckReport check_dg_functor(const DgFunctor& F) {
    const auto& A = *F.source;
    const auto& B = *F.target;
    const int n = A.object_count();
    CheckReport r;
    if (static_cast<int>(F.object_map.size()) != n) return CheckReport::fail("object map has the wrong size");
    const auto& m = F.object_map;
    for (int x = 0; x < n; ++x)
        if (F.map(x, x, A.units[x]) != B.units[m[x]]) return CheckReport::fail("unit of " + A.objects[x] + " not preserved");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int f = 0; f < A.hom(x, y).size(); ++f) {
                SparseVec Ff = F.map_basis(x, y, f);
                if (!Ff.empty() && B.degree(m[x], m[y], Ff) != A.hom(x, y).degrees[f])
                    return CheckReport::fail("degree not preserved on " + basis_label(A, x, y, f));
                if (F.map(x, y, A.d_basis(x, y, f)) != B.d(m[x], m[y], Ff))
                    return CheckReport::fail("does not commute with d on " + basis_label(A, x, y, f));
                ++r.checks;
            }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int g = 0; g < A.hom(y, z).size(); ++g)
                    for (int f = 0; f < A.hom(x, y).size(); ++f) {
                        SparseVec lhs = F.map(x, z, A.compose_basis(x, y, z, g, f));
                        SparseVec rhs = B.compose(m[x], m[y], m[z], F.map_basis(y, z, g), F.map_basis(x, y, f));
                        if (lhs != rhs)
                            return CheckReport::fail("composition not preserved at " + basis_label(A, y, z, g) +
                                                     " o " + basis_label(A, x, y, f));
                        ++r.checks;
                    }
    return r;
}

CheckReport check_nat_trans(const DgNatTrans& a) {
    const auto& A = *a.from.source;
    const auto& B = *a.from.target;
    const auto& E = a.from;
    const auto& F = a.to;
    const int n = A.object_count();
    CheckReport r;
    if (static_cast<int>(a.components.size()) != n) return CheckReport::fail("one component per object expected");
    for (int x = 0; x < n; ++x) {
        const SparseVec& c = a.components[x];
        if (!c.empty() && B.degree(E.object_map[x], F.object_map[x], c) != a.degree)
            return CheckReport::fail("component at " + A.objects[x] + " has the wrong degree");
        if (a.degree == 0 && !B.d(E.object_map[x], F.object_map[x], c).empty())
            return CheckReport::fail("component at " + A.objects[x] + " is not a cocycle");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int f = 0; f < A.hom(x, y).size(); ++f) {
                const int ex = E.object_map[x], ey = E.object_map[y];
                const int fx = F.object_map[x], fy = F.object_map[y];
                SparseVec lhs = B.compose(ex, ey, fy, a.components[y], E.map_basis(x, y, f));
                SparseVec rhs = B.compose(ex, fx, fy, F.map_basis(x, y, f), a.components[x]);
                if (lhs != scaled(rhs, koszul(a.degree, A.hom(x, y).degrees[f])))
                    return CheckReport::fail("naturality fails at " + basis_label(A, x, y, f));
                ++r.checks;
            }
    return r;
}

std::vector<int> GradedComplex::indices_in(int k) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (degrees[i] == k) out.push_back(i);
    return out;
}

GradedComplex hom_complex(const DgCategory& c, int x, int y) {
    GradedComplex g;
    g.degrees = c.hom(x, y).degrees;
    for (int f = 0; f < c.hom(x, y).size(); ++f) g.d.push_back(c.d_basis(x, y, f));
    return g;
}

std::vector<int> degrees_of(const GradedComplex& c) {
    std::set<int> s(c.degrees.begin(), c.degrees.end());
    return {s.begin(), s.end()};
}

namespace {

// cocycles of degree k as ambient vectors
std::vector<SparseVec> cocycles(const GradedComplex& c, int k) {
    auto idx = c.indices_in(k);
    std::vector<SparseVec> cols;
    for (int i : idx) cols.push_back(c.d[i]);
    auto ker = kernel_basis(SparseMatrix::from_columns(c.size(), cols));
    std::vector<SparseVec> out;
    for (const auto& v : ker) {
        SparseVec a;
        for (const auto& [j, x] : v) a.emplace(idx[j], x);
        out.push_back(std::move(a));
    }
    return out;
}

Echelon coboundaries(const GradedComplex& c, int k) {
    Echelon e;
    for (int i : c.indices_in(k - 1))
        if (!c.d[i].empty()) e.insert(c.d[i]);
    return e;
}

}  // namespace

int cohomology_dim(const GradedComplex& c, int k) {
    return static_cast<int>(cocycles(c, k).size()) - static_cast<int>(coboundaries(c, k).rank());
}

InducedMap induced_on_cohomology(const GradedComplex& src, const GradedComplex& dst,
                                 const std::vector<SparseVec>& phi, int k) {
    InducedMap m;
    auto z = cocycles(src, k);
    m.dim_source = static_cast<int>(z.size()) - static_cast<int>(coboundaries(src, k).rank());
    m.dim_target = cohomology_dim(dst, k);
    Echelon b = coboundaries(dst, k);
    const int base = static_cast<int>(b.rank());
    for (const auto& v : z) {
        SparseVec img;
        for (const auto& [i, x] : v) add_scaled(img, x, phi[i]);
        if (!img.empty()) b.insert(std::move(img));
    }
    m.rank = static_cast<int>(b.rank()) - base;
    return m;
}

namespace {

bool find_inverse_pair(const DgCategory& c, int x, int y, int attempts, unsigned seed, bool up_to_homotopy) {
    if (x == y) return true;
    auto zxy = cocycles(hom_complex(c, x, y), 0);
    auto zyx = cocycles(hom_complex(c, y, x), 0);
    if (zxy.empty() || zyx.empty()) return false;
    auto bxx = hom_complex(c, x, x), byy = hom_complex(c, y, y);
    const int nx = c.hom(x, x).size(), ny = c.hom(y, y).size();
    std::vector<SparseVec> bx, by;
    for (int i : bxx.indices_in(-1))
        if (!bxx.d[i].empty()) bx.push_back(bxx.d[i]);
    for (int i : byy.indices_in(-1))
        if (!byy.d[i].empty()) by.push_back(byy.d[i]);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    SparseVec rhs = c.units[x];
    for (const auto& [i, v] : c.units[y]) rhs[nx + i] = v;
    for (int t = 0; t < attempts; ++t) {
        SparseVec u;
        for (const auto& z : zxy) add_scaled(u, Scalar(t == 0 ? 1 : coef(rng)), z);
        if (u.empty()) continue;
        std::vector<SparseVec> cols;
        for (const auto& v : zyx) {
            SparseVec col = c.compose(x, y, x, v, u);
            for (const auto& [i, a] : c.compose(y, x, y, u, v)) col[nx + i] = a;
            cols.push_back(std::move(col));
        }
        if (up_to_homotopy) {
            for (const auto& b : bx) cols.push_back(b);
            for (const auto& b : by) {
                SparseVec col;
                for (const auto& [i, a] : b) col[nx + i] = a;
                cols.push_back(std::move(col));
            }
        }
        if (solve(SparseMatrix::from_columns(nx + ny, cols), rhs)) return true;
    }
    return false;
}

}  // namespace

bool h0_isomorphic(const DgCategory& c, int x, int y, int attempts, unsigned seed) {
    return find_inverse_pair(c, x, y, attempts, seed, true);
}

bool z0_isomorphic(const DgCategory& c, int x, int y, int attempts, unsigned seed) {
    return find_inverse_pair(c, x, y, attempts, seed, false);
}

DgFunctor compose_functors(const DgFunctor& g, const DgFunctor& f) {
    DgFunctor out{f.source, g.target, {}, {}};
    for (int x : f.object_map) out.object_map.push_back(g.object_map.at(x));
    out.map_basis = [g, f](int x, int y, int b) {
        return g.map(f.object_map[x], f.object_map[y], f.map_basis(x, y, b));
    };
    return out;
}

bool functors_equal(const DgFunctor& a, const DgFunctor& b) {
    if (a.object_map != b.object_map) return false;
    const auto& s = *a.source;
    for (int x = 0; x < s.object_count(); ++x)
        for (int y = 0; y < s.object_count(); ++y)
            for (int f = 0; f < s.hom(x, y).size(); ++f)
                if (!vec_equal(a.map_basis(x, y, f), b.map_basis(x, y, f))) return false;
    return true;
}

CheckReport check_quasi_equivalence(const DgFunctor& F, const QuasiEquivalenceOptions& opt) {
    CheckReport r = check_dg_functor(F);
    if (!r.ok) return CheckReport::fail("not a dg functor: " + r.message);
    const auto& A = *F.source;
    const auto& B = *F.target;
    const int n = A.object_count();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int fx = F.object_map[x], fy = F.object_map[y];
            auto src = hom_complex(A, x, y);
            auto dst = hom_complex(B, fx, fy);
            std::vector<SparseVec> phi;
            for (int f = 0; f < src.size(); ++f) phi.push_back(F.map_basis(x, y, f));
            std::set<int> ks(src.degrees.begin(), src.degrees.end());
            ks.insert(dst.degrees.begin(), dst.degrees.end());
            for (int k : ks) {
                auto m = induced_on_cohomology(src, dst, phi, k);
                ++r.checks;
                if (!m.iso()) {
                    std::ostringstream os;
                    os << "H^" << k << " not an isomorphism on (" << A.objects[x] << "," << A.objects[y]
                       << "): dims " << m.dim_source << " -> " << m.dim_target << ", rank " << m.rank;
                    if (B.window_min && k <= *B.window_min) os << " (uncertified degree)";
                    return CheckReport::fail(os.str());
                }
            }
        }
    if (!opt.check_density) return r;
    for (int b = 0; b < B.object_count(); ++b) {
        bool hit = false;
        for (int x = 0; x < n && !hit; ++x) hit = F.object_map[x] == b;
        if (!hit && !opt.strict_density)
            for (int x = 0; x < n && !hit; ++x)
                hit = h0_isomorphic(B, F.object_map[x], b, opt.density_attempts, opt.seed + b);
        if (!hit) return CheckReport::fail("object " + B.objects[b] + " is not in the essential image of H^0");
        ++r.checks;
    }
    return r;
}

CheckReport check_2_quasi_iso(const DgNatTrans& a) {
    if (a.degree != 0) return CheckReport::fail("a 2-quasi-isomorphism has degree 0");
    CheckReport r = check_nat_trans(a);
    if (!r.ok) return CheckReport::fail("not a dg natural transformation: " + r.message);
    const auto& A = *a.from.source;
    const auto& B = *a.from.target;
    for (int x = 0; x < A.object_count(); ++x) {
        const int ex = a.from.object_map[x], fx = a.to.object_map[x];
        for (int b = 0; b < B.object_count(); ++b) {
            auto src = hom_complex(B, b, ex);
            auto dst = hom_complex(B, b, fx);
            std::vector<SparseVec> phi;
            for (int f = 0; f < src.size(); ++f) phi.push_back(B.compose(b, ex, fx, a.components[x], unit_vector(f)));
            std::set<int> ks(src.degrees.begin(), src.degrees.end());
            ks.insert(dst.degrees.begin(), dst.degrees.end());
            for (int k : ks) {
                auto m = induced_on_cohomology(src, dst, phi, k);
                ++r.checks;
                if (!m.iso()) {
                    std::ostringstream os;
                    os << "post-composition with the component at " << A.objects[x] << " fails on H^" << k
                       << " of (" << B.objects[b] << ", -): dims " << m.dim_source << " -> " << m.dim_target
                       << ", rank " << m.rank;
                    return CheckReport::fail(os.str());
                }
            }
        }
    }
    return r;
}

}  // namespace dgw
