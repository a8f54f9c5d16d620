#include "cographic/cone.hpp"

#include "cographic/parallel.hpp"

#include <algorithm>
#include <set>

namespace cographic {

namespace {

RatVec canon_ray(const RatVec& v) { return to_rat_vec(primitive_direction(v)); }

struct VecLess {
    bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};
struct IntVecLess {
    bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};

// Rows spanning the orthogonal complement of the span of `vecs`.
RatMat orthogonal_complement_rows(Eigen::Index n, const std::vector<RatVec>& vecs) {
    RatMat gt(static_cast<Eigen::Index>(vecs.size()), n);
    for (size_t i = 0; i < vecs.size(); ++i) gt.row(static_cast<Eigen::Index>(i)) = vecs[i].transpose();
    RatMat ker = kernel_basis<Rat>(gt);  // columns a with G^T a = 0 ... (rows of gt are generators)
    RatMat rows(ker.cols(), n);
    for (Eigen::Index j = 0; j < ker.cols(); ++j)
        rows.row(j) = to_rat_vec(primitive_direction(RatVec(ker.col(j)))).transpose();
    return rows;
}

}  // namespace

VRep dual_description(Eigen::Index n, const RatMat& equations, const RatMat& inequalities) {
    // Start from the solution space of the equations as pure lineality.
    std::vector<RatVec> lineality;
    {
        RatMat eq = equations.rows() > 0 ? equations : RatMat::Zero(0, n);
        RatMat ker = kernel_basis<Rat>(eq);
        if (equations.rows() == 0) ker = RatMat::Identity(n, n);
        for (Eigen::Index j = 0; j < ker.cols(); ++j) lineality.push_back(ker.col(j));
    }

    struct Ray {
        RatVec v;
        std::vector<bool> tight;  // over processed inequality slots
    };
    std::vector<Ray> rays;
    Eigen::Index processed = 0;

    // Rays are kept as canonical representatives modulo the lineality space,
    // so vector equality detects equal ray classes.
    auto reduce_mod_lineality = [&lineality](const RatVec& v) {
        if (lineality.empty()) return v;
        RatMat lin(v.size(), static_cast<Eigen::Index>(lineality.size()));
        for (size_t j = 0; j < lineality.size(); ++j) lin.col(static_cast<Eigen::Index>(j)) = lineality[j];
        const RatMat gram_inv = inverse<Rat>(RatMat(lin.transpose() * lin));
        return RatVec(v - lin * gram_inv * (lin.transpose() * v));
    };

    for (Eigen::Index i = 0; i < inequalities.rows(); ++i) {
        const RatVec a = inequalities.row(i).transpose();
        if (a.isZero()) continue;

        // Lineality crossing the hyperplane?
        Eigen::Index wi = -1;
        for (size_t j = 0; j < lineality.size(); ++j)
            if (a.dot(lineality[j]) != 0) { wi = static_cast<Eigen::Index>(j); break; }

        if (wi >= 0) {
            RatVec w = lineality[static_cast<size_t>(wi)];
            if (a.dot(w) < 0) w = -w;
            const Rat aw = a.dot(w);
            std::vector<RatVec> new_lin;
            for (size_t j = 0; j < lineality.size(); ++j) {
                if (static_cast<Eigen::Index>(j) == wi) continue;
                const Rat f = Rat(a.dot(lineality[j])) / aw;
                new_lin.push_back(lineality[j] - f * w);
            }
            lineality = std::move(new_lin);
            for (Ray& r : rays) {
                const Rat f = Rat(a.dot(r.v)) / aw;
                r.v = canon_ray(reduce_mod_lineality(r.v - f * w));
                r.tight.push_back(true);
            }
            Ray wray;
            wray.v = canon_ray(reduce_mod_lineality(w));
            wray.tight.assign(static_cast<size_t>(processed), true);
            wray.tight.push_back(false);
            rays.push_back(std::move(wray));
            std::sort(rays.begin(), rays.end(), [](const Ray& x, const Ray& y) { return lex_less(x.v, y.v); });
            rays.erase(std::unique(rays.begin(), rays.end(),
                                   [](const Ray& x, const Ray& y) { return x.v == y.v; }),
                       rays.end());
            ++processed;
            continue;
        }

        std::vector<size_t> pos, neg, zero;
        std::vector<Rat> val(rays.size());
        for (size_t j = 0; j < rays.size(); ++j) {
            val[j] = a.dot(rays[j].v);
            if (val[j] > 0) pos.push_back(j);
            else if (val[j] < 0) neg.push_back(j);
            else zero.push_back(j);
        }
        if (neg.empty()) {
            for (size_t j : zero) rays[j].tight.push_back(true);
            for (size_t j : pos) rays[j].tight.push_back(false);
            ++processed;
            continue;
        }

        // Combinatorial adjacency: p and q are adjacent iff no third ray is
        // tight everywhere both are.
        auto adjacent = [&](size_t p, size_t q) {
            for (size_t t = 0; t < rays.size(); ++t) {
                if (t == p || t == q) continue;
                bool contains = true;
                for (Eigen::Index k = 0; k < processed; ++k) {
                    if (rays[p].tight[static_cast<size_t>(k)] && rays[q].tight[static_cast<size_t>(k)] &&
                        !rays[t].tight[static_cast<size_t>(k)]) {
                        contains = false;
                        break;
                    }
                }
                if (contains) return false;
            }
            return true;
        };

        std::vector<Ray> next;
        for (size_t j : pos) {
            next.push_back(rays[j]);
            next.back().tight.push_back(false);
        }
        for (size_t j : zero) {
            next.push_back(rays[j]);
            next.back().tight.push_back(true);
        }
        for (size_t p : pos) {
            for (size_t q : neg) {
                if (!adjacent(p, q)) continue;
                Ray comb;
                comb.v = canon_ray(reduce_mod_lineality(val[p] * rays[q].v - val[q] * rays[p].v));
                comb.tight.resize(static_cast<size_t>(processed) + 1);
                for (Eigen::Index k = 0; k < processed; ++k)
                    comb.tight[static_cast<size_t>(k)] =
                        rays[p].tight[static_cast<size_t>(k)] && rays[q].tight[static_cast<size_t>(k)];
                comb.tight[static_cast<size_t>(processed)] = true;
                next.push_back(std::move(comb));
            }
        }
        // Drop duplicate directions.
        std::sort(next.begin(), next.end(), [](const Ray& x, const Ray& y) { return lex_less(x.v, y.v); });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Ray& x, const Ray& y) { return x.v == y.v; }),
                   next.end());
        rays = std::move(next);
        ++processed;
    }

    VRep out;
    for (const RatVec& l : lineality) out.lineality.push_back(canon_ray(l));
    for (const Ray& r : rays) out.rays.push_back(r.v);
    std::sort(out.rays.begin(), out.rays.end(), VecLess{});
    return out;
}

Cone Cone::from_generators(Eigen::Index ambient_dim, std::vector<RatVec> generators) {
    Cone c(ambient_dim);
    for (const RatVec& g : generators) {
        if (g.size() != ambient_dim) throw std::invalid_argument("Cone: generator dimension mismatch");
        if (g.isZero()) throw std::invalid_argument("Cone: zero generator");
    }
    c.generators_ = std::move(generators);
    return c;
}

Cone Cone::from_inequalities(Eigen::Index ambient_dim, const RatMat& inequalities) {
    if (inequalities.cols() != ambient_dim)
        throw std::invalid_argument("Cone: inequality dimension mismatch");
    const VRep v = dual_description(ambient_dim, RatMat::Zero(0, ambient_dim), inequalities);
    std::vector<RatVec> gens = v.rays;
    for (const RatVec& l : v.lineality) {
        gens.push_back(l);
        gens.push_back(-l);
    }
    Cone c = gens.empty() ? Cone(ambient_dim) : from_generators(ambient_dim, std::move(gens));
    for (const RatVec& g : c.generators_)
        if (((inequalities * g).array() < 0).any())
            throw std::logic_error("Cone: double description produced an outside generator");
    return c;
}

const HRep& Cone::hrep() const {
    if (hrep_) return *hrep_;
    HRep h;
    h.equations = orthogonal_complement_rows(n_, generators_);
    const Eigen::Index d = n_ - h.equations.rows();
    if (d == 0 || generators_.empty()) {
        h.inequalities = RatMat::Zero(0, n_);
        if (generators_.empty()) h.equations = RatMat::Identity(n_, n_);
        hrep_ = std::move(h);
        return *hrep_;
    }

    // Restrict to the span, compute facets there, lift the normals back.
    RatMat gmat(n_, static_cast<Eigen::Index>(generators_.size()));
    for (size_t j = 0; j < generators_.size(); ++j) gmat.col(static_cast<Eigen::Index>(j)) = generators_[j];
    RatMat reduced = gmat;
    const auto pivots = row_reduce(reduced);
    RatMat span(n_, d);
    for (size_t k = 0; k < pivots.size(); ++k) span.col(static_cast<Eigen::Index>(k)) = gmat.col(pivots[k]);
    const RatMat gram_inv = inverse<Rat>(RatMat(span.transpose() * span));
    const RatMat coords = gram_inv * span.transpose() * gmat;  // d x k

    RatMat ineq_rows(static_cast<Eigen::Index>(generators_.size()), d);
    for (Eigen::Index j = 0; j < coords.cols(); ++j) ineq_rows.row(j) = coords.col(j).transpose();
    const VRep dual = dual_description(d, RatMat::Zero(0, d), ineq_rows);
    if (!dual.lineality.empty())
        throw std::logic_error("Cone: dual of a full-dimensional cone cannot have lineality");

    h.inequalities.resize(static_cast<Eigen::Index>(dual.rays.size()), n_);
    for (size_t i = 0; i < dual.rays.size(); ++i) {
        const RatVec lifted = span * gram_inv * dual.rays[i];
        h.inequalities.row(static_cast<Eigen::Index>(i)) = canon_ray(lifted).transpose();
    }
    hrep_ = std::move(h);
    return *hrep_;
}

Eigen::Index Cone::dim() const { return n_ - hrep().equations.rows(); }

bool Cone::is_pointed() const {
    const HRep& h = hrep();
    RatMat stacked(h.equations.rows() + h.inequalities.rows(), n_);
    stacked.topRows(h.equations.rows()) = h.equations;
    stacked.bottomRows(h.inequalities.rows()) = h.inequalities;
    return rank<Rat>(stacked) == n_;
}

bool Cone::contains(const RatVec& x) const {
    if (x.size() != n_) throw std::invalid_argument("Cone::contains: dimension mismatch");
    const HRep& h = hrep();
    if (h.equations.rows() > 0 && !(h.equations * x).isZero()) return false;
    return h.inequalities.rows() == 0 || !((h.inequalities * x).array() < 0).any();
}

const std::vector<RatVec>& Cone::extremal_rays() const {
    if (extremal_) return *extremal_;
    if (!is_pointed()) throw std::invalid_argument("extremal_rays: cone is not pointed");
    const HRep& h = hrep();
    std::set<RatVec, VecLess> found;
    for (const RatVec& g : generators_) {
        std::vector<RatVec> tight;
        for (Eigen::Index i = 0; i < h.equations.rows(); ++i) tight.push_back(h.equations.row(i).transpose());
        for (Eigen::Index i = 0; i < h.inequalities.rows(); ++i)
            if ((h.inequalities.row(i) * g).value() == 0) tight.push_back(h.inequalities.row(i).transpose());
        RatMat m(static_cast<Eigen::Index>(tight.size()), n_);
        for (size_t i = 0; i < tight.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = tight[i].transpose();
        if (rank<Rat>(m) == n_ - 1) found.insert(canon_ray(g));
    }
    extremal_ = std::vector<RatVec>(found.begin(), found.end());
    return *extremal_;
}

Cone Cone::dual() const {
    RatMat rows(static_cast<Eigen::Index>(generators_.size()), n_);
    for (size_t i = 0; i < generators_.size(); ++i) rows.row(static_cast<Eigen::Index>(i)) = generators_[i].transpose();
    const VRep v = dual_description(n_, RatMat::Zero(0, n_), rows);
    std::vector<RatVec> gens = v.rays;
    for (const RatVec& l : v.lineality) {
        gens.push_back(l);
        gens.push_back(-l);
    }
    return gens.empty() ? Cone(n_) : from_generators(n_, std::move(gens));
}

std::vector<RatVec> primitive_ray_generators(const Cone& c, const Lattice& L) {
    std::vector<RatVec> out;
    for (const RatVec& r : c.extremal_rays()) out.push_back(L.primitive(r));
    return out;
}

// ---------------------------------------------------------------------------
// Triangulation helpers. All work on full-dimensional data in standard
// coordinates; callers restrict to spans first.

namespace {

// Pulling triangulation of a pointed full-dimensional cone given by its
// extremal rays; returns simplicial subcones as ray-index sets.
std::vector<std::vector<size_t>> triangulate_cone_rays(Eigen::Index dim, const std::vector<RatVec>& rays) {
    if (static_cast<Eigen::Index>(rays.size()) == dim) {
        std::vector<size_t> all(rays.size());
        for (size_t i = 0; i < all.size(); ++i) all[i] = i;
        return {all};
    }
    const Cone c = Cone::from_generators(dim, rays);
    const HRep& h = c.hrep();
    std::vector<std::vector<size_t>> out;
    for (Eigen::Index f = 0; f < h.inequalities.rows(); ++f) {
        const RatVec normal = h.inequalities.row(f).transpose();
        if (normal.dot(rays[0]) == 0) continue;  // facet contains the apex ray
        std::vector<size_t> facet_rays;
        for (size_t i = 0; i < rays.size(); ++i)
            if (normal.dot(rays[i]) == 0) facet_rays.push_back(i);

        // Restrict the facet to its span and recurse one dimension down.
        RatMat fmat(dim, static_cast<Eigen::Index>(facet_rays.size()));
        for (size_t i = 0; i < facet_rays.size(); ++i)
            fmat.col(static_cast<Eigen::Index>(i)) = rays[facet_rays[i]];
        RatMat reduced = fmat;
        const auto pivots = row_reduce(reduced);
        const Eigen::Index fd = static_cast<Eigen::Index>(pivots.size());
        if (fd != dim - 1) throw std::logic_error("triangulate_cone: facet of unexpected dimension");
        RatMat span(dim, fd);
        for (size_t k = 0; k < pivots.size(); ++k) span.col(static_cast<Eigen::Index>(k)) = fmat.col(pivots[k]);
        const RatMat gram_inv = inverse<Rat>(RatMat(span.transpose() * span));
        std::vector<RatVec> restricted;
        for (size_t i = 0; i < facet_rays.size(); ++i)
            restricted.push_back(gram_inv * span.transpose() * rays[facet_rays[i]]);

        for (const auto& sub : triangulate_cone_rays(fd, restricted)) {
            std::vector<size_t> simplex{0};
            for (size_t idx : sub) simplex.push_back(facet_rays[idx]);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

// Vertices of conv(points) as indices: extremal generators of the
// homogenization cone.
std::vector<size_t> polytope_vertex_indices(Eigen::Index dim, const std::vector<RatVec>& points) {
    std::vector<RatVec> lifted;
    for (const RatVec& p : points) {
        RatVec q(dim + 1);
        q(0) = 1;
        q.tail(dim) = p;
        lifted.push_back(q);
    }
    const Cone hom = Cone::from_generators(dim + 1, lifted);
    const HRep& h = hom.hrep();
    std::vector<size_t> out;
    for (size_t i = 0; i < lifted.size(); ++i) {
        RatMat tight(h.equations.rows() + h.inequalities.rows(), dim + 1);
        Eigen::Index rows = h.equations.rows();
        tight.topRows(rows) = h.equations;
        for (Eigen::Index f = 0; f < h.inequalities.rows(); ++f)
            if ((h.inequalities.row(f) * lifted[i]).value() == 0) tight.row(rows++) = h.inequalities.row(f);
        if (rank<Rat>(RatMat(tight.topRows(rows))) == dim) out.push_back(i);
    }
    return out;
}

// Pulling triangulation of a full-dimensional polytope conv(points) in R^dim;
// input may contain non-vertex points; returns simplices as point-index sets
// of size dim+1.
std::vector<std::vector<size_t>> triangulate_polytope(Eigen::Index dim, const std::vector<RatVec>& points) {
    const std::vector<size_t> vidx = polytope_vertex_indices(dim, points);
    if (static_cast<Eigen::Index>(vidx.size()) == dim + 1) return {vidx};

    // Facets via the homogenization.
    std::vector<RatVec> lifted;
    for (size_t i : vidx) {
        RatVec q(dim + 1);
        q(0) = 1;
        q.tail(dim) = points[i];
        lifted.push_back(q);
    }
    const Cone hom = Cone::from_generators(dim + 1, lifted);
    const HRep& h = hom.hrep();

    std::vector<std::vector<size_t>> out;
    const size_t apex = vidx[0];
    for (Eigen::Index f = 0; f < h.inequalities.rows(); ++f) {
        const RatVec normal = h.inequalities.row(f).transpose();
        if (normal.dot(lifted[0]) == 0) continue;
        std::vector<size_t> facet_pts;
        for (size_t k = 0; k < vidx.size(); ++k)
            if (normal.dot(lifted[k]) == 0) facet_pts.push_back(vidx[k]);
        if (facet_pts.empty()) continue;

        // Coordinates within the facet's affine hull.
        const RatVec base = points[facet_pts[0]];
        RatMat dirs(dim, static_cast<Eigen::Index>(facet_pts.size()));
        for (size_t k = 0; k < facet_pts.size(); ++k)
            dirs.col(static_cast<Eigen::Index>(k)) = points[facet_pts[k]] - base;
        RatMat reduced = dirs;
        const auto pivots = row_reduce(reduced);
        const Eigen::Index fd = static_cast<Eigen::Index>(pivots.size());
        if (fd != dim - 1) throw std::logic_error("triangulate_polytope: facet of unexpected dimension");
        RatMat span(dim, fd);
        for (size_t k = 0; k < pivots.size(); ++k) span.col(static_cast<Eigen::Index>(k)) = dirs.col(pivots[k]);
        const RatMat gram_inv = inverse<Rat>(RatMat(span.transpose() * span));
        std::vector<RatVec> restricted;
        for (size_t k = 0; k < facet_pts.size(); ++k)
            restricted.push_back(gram_inv * span.transpose() * (points[facet_pts[k]] - base));

        for (const auto& sub : triangulate_polytope(fd, restricted)) {
            std::vector<size_t> simplex{apex};
            for (size_t idx : sub) simplex.push_back(facet_pts[idx]);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

}  // namespace

Rat polytope_volume(const std::vector<RatVec>& vertices, const Lattice& L) {
    if (vertices.empty()) return Rat(0);
    const Eigen::Index n = L.dim();
    if (n == 0) return Rat(1);
    std::vector<RatVec> pts;
    for (const RatVec& v : vertices) pts.push_back(L.coords(v));
    std::sort(pts.begin(), pts.end(), VecLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // Degenerate (lower-dimensional) hulls have volume zero.
    RatMat dirs(n, static_cast<Eigen::Index>(pts.size()));
    for (size_t i = 0; i < pts.size(); ++i) dirs.col(static_cast<Eigen::Index>(i)) = pts[i] - pts[0];
    if (rank<Rat>(dirs) < n) return Rat(0);

    Rat vol(0);
    for (const auto& simplex : triangulate_polytope(n, pts)) {
        RatMat m(n, n);
        for (size_t k = 1; k < simplex.size(); ++k)
            m.col(static_cast<Eigen::Index>(k - 1)) = pts[simplex[k]] - pts[simplex[0]];
        Rat d = determinant<Rat>(m);
        if (d < 0) d = -d;
        vol += d;
    }
    return vol;
}

// ---------------------------------------------------------------------------
// Hilbert bases.

namespace {

constexpr long kEnumerationGuard = 10'000'000;

// Hilbert basis of a pointed full-dimensional cone in Z^dim coordinates.
std::vector<IntVec> hilbert_basis_full_dim(Eigen::Index dim, const std::vector<RatVec>& generators) {
    const Cone c = Cone::from_generators(dim, generators);
    const std::vector<RatVec>& rays = c.extremal_rays();
    std::vector<IntVec> prim;
    for (const RatVec& r : rays) prim.push_back(primitive_direction(r));

    std::set<IntVec, IntVecLess> candidates;
    for (const IntVec& p : prim) candidates.insert(p);

    for (const auto& simplex : triangulate_cone_rays(dim, rays)) {
        IntMat w(dim, dim);
        for (size_t k = 0; k < simplex.size(); ++k) w.col(static_cast<Eigen::Index>(k)) = prim[simplex[k]];
        const SmithResult snf = smith_normal_form(w);
        Int det = 1;
        for (Eigen::Index i = 0; i < dim; ++i) det *= snf.s(i, i);
        if (det == 0) throw std::logic_error("hilbert_basis: degenerate simplicial subcone");
        if (abs(det) > kEnumerationGuard)
            throw std::invalid_argument("hilbert_basis: fundamental parallelotope too large");
        if (abs(det) == 1) continue;  // unimodular subcone contributes nothing new

        const RatMat winv = inverse<Rat>(to_rat_mat(w));
        // Inverse of the unimodular factor u: integral.
        RatMat urat_inv = inverse<Rat>(to_rat_mat(snf.u));
        IntMat uinv_i(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j) {
                if (!is_integer(urat_inv(i, j))) throw std::logic_error("hilbert_basis: u is not unimodular");
                uinv_i(i, j) = urat_inv(i, j).get_num();
            }

        // Enumerate Z^dim / W Z^dim via the Smith form and reduce each class
        // representative into the half-open parallelotope of w.
        IntVec counter = IntVec::Zero(dim);
        for (;;) {
            if (!counter.isZero()) {
                const IntVec x0 = uinv_i * counter;
                const RatVec t = winv * to_rat_vec(x0);
                IntVec x = x0;
                for (Eigen::Index i = 0; i < dim; ++i) {
                    const Int f = floor_rat(t(i));
                    if (f != 0) x -= f * IntVec(w.col(i));
                }
                if (!x.isZero()) candidates.insert(x);
            }
            Eigen::Index pos = 0;
            while (pos < dim) {
                counter(pos) += 1;
                if (counter(pos) < snf.s(pos, pos)) break;
                counter(pos) = 0;
                ++pos;
            }
            if (pos == dim) break;
        }
    }

    // Global minimality: h stays iff no other candidate c has h - c in the cone.
    const std::vector<IntVec> cand(candidates.begin(), candidates.end());
    const HRep& h = c.hrep();
    std::vector<char> keep(cand.size(), 1);
    parallel_for(cand.size(), [&](size_t i) {
        const RatVec hi = to_rat_vec(cand[i]);
        for (size_t j = 0; j < cand.size(); ++j) {
            if (j == i) continue;
            const RatVec diff = hi - to_rat_vec(cand[j]);
            if (diff.isZero()) continue;
            if (!((h.inequalities * diff).array() < 0).any()) { keep[i] = 0; break; }
        }
    });
    std::vector<IntVec> out;
    for (size_t i = 0; i < cand.size(); ++i)
        if (keep[i]) out.push_back(cand[i]);
    return out;
}

// Integral basis (columns) of span(generators) ∩ Z^n, saturated.
IntMat span_lattice_basis(Eigen::Index n, const std::vector<RatVec>& generators) {
    const RatMat eq = orthogonal_complement_rows(n, generators);
    IntMat eq_i(eq.rows(), n);
    for (Eigen::Index i = 0; i < eq.rows(); ++i)
        eq_i.row(i) = primitive_direction(RatVec(eq.row(i).transpose())).transpose();
    return integer_kernel(eq_i);
}

}  // namespace

std::vector<RatVec> hilbert_basis(const Cone& c, const Lattice& L) {
    if (!c.is_pointed()) throw std::invalid_argument("hilbert_basis: cone is not pointed");
    const Eigen::Index n = c.ambient_dim();
    if (c.generators().empty() || c.dim() == 0) return {};

    // Work in lattice coordinates, restricted to the span when necessary.
    std::vector<RatVec> gens_l;
    for (const RatVec& g : c.generators()) gens_l.push_back(L.coords(g));

    const Eigen::Index d = c.dim();
    std::vector<IntVec> basis_points;
    if (d == n) {
        basis_points = hilbert_basis_full_dim(n, gens_l);
        std::vector<RatVec> out;
        for (const IntVec& p : basis_points) out.push_back(L.from_coords(to_rat_vec(p)));
        std::sort(out.begin(), out.end(), VecLess{});
        return out;
    }

    const IntMat span_basis = span_lattice_basis(n, gens_l);  // n x d
    if (span_basis.cols() != d) throw std::logic_error("hilbert_basis: span lattice rank mismatch");
    const RatMat sb = to_rat_mat(span_basis);
    const RatMat gram_inv = inverse<Rat>(RatMat(sb.transpose() * sb));
    std::vector<RatVec> restricted;
    for (const RatVec& g : gens_l) restricted.push_back(gram_inv * sb.transpose() * g);
    basis_points = hilbert_basis_full_dim(d, restricted);

    std::vector<RatVec> out;
    for (const IntVec& p : basis_points) out.push_back(L.from_coords(RatVec(sb * to_rat_vec(p))));
    std::sort(out.begin(), out.end(), VecLess{});
    return out;
}

// ---------------------------------------------------------------------------
// Classification.

ConeClassification classify_cone(const Cone& c, const Lattice& L) {
    const Eigen::Index n = c.ambient_dim();
    if (c.dim() != n) throw std::invalid_argument("classify_cone: cone is not full-dimensional");
    if (!c.is_pointed()) throw std::invalid_argument("classify_cone: cone is not pointed");

    ConeClassification out;
    if (n == 0) {
        out.q_gorenstein = out.gorenstein = out.canonical = out.terminal = true;
        out.m_sigma = RatVec(0);
        return out;
    }

    const std::vector<RatVec> u = primitive_ray_generators(c, L);
    IntMat a(static_cast<Eigen::Index>(u.size()), n);
    for (size_t i = 0; i < u.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = to_int_vec(L.coords(u[i])).transpose();

    const RatVec ones = RatVec::Ones(static_cast<Eigen::Index>(u.size()));
    const auto m = solve_linear<Rat>(to_rat_mat(a), ones);
    if (!m) return out;  // not Q-Gorenstein
    out.q_gorenstein = true;
    out.m_sigma = L.dual().from_coords(*m);

    const IntVec ones_i = IntVec::Ones(static_cast<Eigen::Index>(u.size()));
    out.gorenstein = solve_integer(a, ones_i).has_value();

    std::vector<RatVec> pi_vertices{RatVec::Zero(n)};
    for (const RatVec& v : u) pi_vertices.push_back(v);
    const std::vector<RatVec> pts = lattice_points_in_polytope(pi_vertices, L);

    std::set<RatVec, VecLess> vertex_set;
    vertex_set.insert(RatVec::Zero(n));
    for (const RatVec& v : u) vertex_set.insert(v);

    out.canonical = true;
    out.terminal = true;
    for (const RatVec& p : pts) {
        if (p.isZero()) continue;
        const Rat pairing = m->dot(L.coords(p));
        if (pairing != 1) out.canonical = false;
        if (!vertex_set.count(p)) out.terminal = false;
    }
    if (!out.canonical) out.terminal = false;
    return out;
}

bool is_smooth_cone(const Cone& c, const Lattice& L) {
    if (!c.is_pointed()) return false;
    const std::vector<RatVec> u = primitive_ray_generators(c, L);
    if (static_cast<Eigen::Index>(u.size()) != c.dim()) return false;
    IntMat m(L.dim(), static_cast<Eigen::Index>(u.size()));
    for (size_t i = 0; i < u.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = to_int_vec(L.coords(u[i]));
    const SmithResult snf = smith_normal_form(m);
    const Eigen::Index t = std::min(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < t; ++i)
        if (snf.s(i, i) != 1) return false;
    return true;
}

std::vector<RatVec> lattice_points_in_polytope(const std::vector<RatVec>& vertices, const Lattice& L) {
    if (vertices.empty()) return {};
    const Eigen::Index n = L.dim();
    if (n == 0) return {RatVec(0)};

    std::vector<RatVec> coords;
    for (const RatVec& v : vertices) {
        if (v.size() != n) throw std::invalid_argument("lattice_points_in_polytope: dimension mismatch");
        coords.push_back(L.coords(v));
    }

    // H-representation via the homogenization cone over (1, v).
    std::vector<RatVec> lifted;
    for (const RatVec& p : coords) {
        RatVec q(n + 1);
        q(0) = 1;
        q.tail(n) = p;
        lifted.push_back(q);
    }
    const Cone hom = Cone::from_generators(n + 1, lifted);
    const HRep& h = hom.hrep();

    auto inside = [&](const RatVec& x) {
        RatVec q(n + 1);
        q(0) = 1;
        q.tail(n) = x;
        if (h.equations.rows() > 0 && !(h.equations * q).isZero()) return false;
        return h.inequalities.rows() == 0 || !((h.inequalities * q).array() < 0).any();
    };

    IntVec lo(n), hi(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Rat mn = coords[0](i), mx = coords[0](i);
        for (const RatVec& p : coords) {
            if (p(i) < mn) mn = p(i);
            if (p(i) > mx) mx = p(i);
        }
        lo(i) = ceil_rat(mn);
        hi(i) = floor_rat(mx);
    }
    Int cells = 1;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (hi(i) < lo(i)) return {};
        cells *= hi(i) - lo(i) + 1;
        if (cells > kEnumerationGuard)
            throw std::invalid_argument("lattice_points_in_polytope: bounding box too large");
    }

    std::vector<RatVec> out;
    IntVec x = lo;
    for (;;) {
        if (inside(to_rat_vec(x))) out.push_back(L.from_coords(to_rat_vec(x)));
        Eigen::Index pos = 0;
        while (pos < n) {
            x(pos) += 1;
            if (x(pos) <= hi(pos)) break;
            x(pos) = lo(pos);
            ++pos;
        }
        if (pos == n) break;
    }
    std::sort(out.begin(), out.end(), VecLess{});
    return out;
}

Int subdiagram_volume(const Cone& c, const Lattice& L) {
    if (!c.is_pointed()) throw std::invalid_argument("subdiagram_volume: cone is not pointed");
    const Eigen::Index n = c.ambient_dim();
    if (c.dim() != n)
        throw std::invalid_argument("subdiagram_volume: cone is not full-dimensional");
    if (n == 0) return 1;

    // Work in lattice coordinates throughout.
    std::vector<RatVec> hb;
    for (const RatVec& v : hilbert_basis(c, L)) hb.push_back(L.coords(v));
    std::vector<RatVec> rays;
    for (const RatVec& r : c.extremal_rays()) rays.push_back(to_rat_vec(primitive_direction(L.coords(r))));

    // K+ = conv(HB) + cone: facets via the homogenization with recession rays
    // at height zero.
    std::vector<RatVec> lifted;
    for (const RatVec& p : hb) {
        RatVec q(n + 1);
        q(0) = 1;
        q.tail(n) = p;
        lifted.push_back(q);
    }
    for (const RatVec& r : rays) {
        RatVec q(n + 1);
        q(0) = 0;
        q.tail(n) = r;
        lifted.push_back(q);
    }
    const Cone hom = Cone::from_generators(n + 1, lifted);
    const HRep& h = hom.hrep();
    if (h.equations.rows() != 0) throw std::logic_error("subdiagram_volume: K+ is not full-dimensional");

    const Lattice std_lattice = Lattice::standard(n);
    Rat vol(0);
    for (Eigen::Index f = 0; f < h.inequalities.rows(); ++f) {
        const RatVec row = h.inequalities.row(f).transpose();
        if (row(0) >= 0) continue;  // facet hyperplane does not separate the origin
        // Bounded facet: no recession ray may be tight on it.
        std::vector<RatVec> pyramid{RatVec::Zero(n)};
        for (size_t i = 0; i < hb.size(); ++i)
            if (row.dot(lifted[i]) == 0) pyramid.push_back(hb[i]);
        for (size_t i = 0; i < rays.size(); ++i) {
            RatVec q(n + 1);
            q(0) = 0;
            q.tail(n) = rays[i];
            if (row.dot(q) == 0)
                throw std::logic_error("subdiagram_volume: unbounded subdiagram facet");
        }
        vol += polytope_volume(pyramid, std_lattice);
    }
    if (!is_integer(vol)) throw std::logic_error("subdiagram_volume: non-integral volume");
    return vol.get_num();
}

}  // namespace cographic
