#include "weil/bundle.hpp"

#include <random>

#include "weil/errors.hpp"

namespace weil {

FiberedProlongation fibered_prolong(const TrivialBundle& bundle, const AlgebraPtr& W) {
    FiberedProlongation fp;
    fp.bundle = bundle;
    fp.W = W;
    fp.total_linear_dim = bundle.base_dim + bundle.fiber_dim * W->dim();
    return fp;
}

FiberedPoint fibered_point(const FiberedProlongation& fp, const RatVec& base, WPoint fiber) {
    if (base.size() != fp.bundle.base_dim) throw MismatchError("base point has the wrong dimension");
    if (fiber.arity() != fp.bundle.fiber_dim)
        throw MismatchError("fiber point has the wrong dimension");
    if (!same_algebra(fiber.alg, fp.W)) throw MismatchError("fiber lives over the wrong algebra");
    return FiberedPoint{base, std::move(fiber)};
}

RatVec bundle_projection(const FiberedPoint& p) { return p.base; }

FiberedPoint fiber_add(const FiberedPoint& p, const FiberedPoint& q) {
    if (p.base != q.base) throw MismatchError("fiberwise addition needs a shared base point");
    if (p.fiber.arity() != q.fiber.arity()) throw MismatchError("fiber dimensions differ");
    FiberedPoint out = p;
    for (size_t i = 0; i < out.fiber.coords.size(); ++i)
        out.fiber.coords[i] = out.fiber.coords[i] + q.fiber.coords[i];
    return out;
}

FiberedPoint fiber_scale(const Rat& c, const FiberedPoint& p) {
    FiberedPoint out = p;
    for (Element& e : out.fiber.coords) e = c * e;
    return out;
}

FiberedPoint apply_fiber_map(const std::vector<Expr>& fiber_map, const FiberedPoint& p) {
    FiberedPoint out;
    out.base = p.base;
    out.fiber.alg = p.fiber.alg;
    out.fiber.coords.reserve(fiber_map.size());
    for (const Expr& f : fiber_map) out.fiber.coords.push_back(eval_jet(f, p.fiber));
    return out;
}

IteratedProlongation iterated_prolongation(size_t n, const AlgebraPtr& W1, const AlgebraPtr& W2) {
    IteratedProlongation it;
    it.n = n;
    it.ft = fibered_tensor(W1, W2);
    it.tensor = it.ft.tensor;

    size_t D = it.tensor.algebra->dim();
    size_t dB = W2->dim();
    RatMatrix diff = it.ft.proj_like.matrix() - it.ft.constant.matrix();

    // coordinatewise equalizer: block-diagonal kernel in R^n (x) (W1 (x) W2)
    RatMatrix sys(n * dB, n * D);
    for (size_t b = 0; b < n; ++b)
        for (size_t r = 0; r < dB; ++r)
            for (size_t cidx = 0; cidx < D; ++cidx) sys.at(b * dB + r, b * D + cidx) = diff.at(r, cidx);
    RatMatrix ker = sys.kernel();
    std::vector<RatVec> rows;
    for (size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
    it.carrier = LinSubspace::span(n * D, rows);

    size_t s = it.ft.algebra->dim();
    it.expected_dim = n * s;
    it.dimension_ok = (it.carrier.dim() == it.expected_dim);

    // canonical comparison with R^n (x) (W1 (x)~ W2): blockwise inclusion
    RatMatrix cmp(n * D, n * s);
    const RatMatrix& inc = it.ft.inclusion.matrix(); // D x s
    for (size_t b = 0; b < n; ++b)
        for (size_t i = 0; i < D; ++i)
            for (size_t j = 0; j < s; ++j) cmp.at(b * D + i, b * s + j) = inc.at(i, j);
    LinSubspace image = LinSubspace::full(n * s).image_under(cmp);
    it.comparison_bijective = (image == it.carrier) && cmp.rank() == n * s;
    return it;
}

EuclideanReport euclidean_check(size_t n) {
    AlgebraPtr WD = build_weil_algebra(parse_presentation("x | x^2 ; nil 2"));
    AlgebraPtr WDp2 = build_weil_algebra(parse_presentation("x,y | x^2, y^2, x*y ; nil 2"));

    EuclideanReport rep;
    rep.n = n;

    IteratedProlongation it = iterated_prolongation(n, WD, WD);
    rep.dim_left = it.carrier.dim();
    rep.dim_right = 2 * n + 2 * n - n;

    if (n == 0) {
        rep.comparison_bijective = it.carrier.dim() == 0;
        rep.projection_compatible = true;
        return rep;
    }

    // the thm-6-6 comparison chain, one 3x3 block per coordinate:
    //   W_D (x)~ W_D  ->  W_D(2)  ->  W_D x_Q W_D
    const AlgebraPtr& T = it.tensor.algebra;
    Element gx = T->generator(0), gy = T->generator(1);
    AlgebraHom psi_ambient = hom_from_generator_images(WDp2, T, {gx, multiply(gx, gy)});
    AlgebraHom psi = restrict_hom(full_view(WDp2), it.ft.view(), psi_ambient); // bijective by Prop 3.3
    RatMatrix psi_inv = psi.matrix().inverse();

    AlgebraHom h1 = hom_from_image_strings(WDp2, WD, {"x", "0"});
    AlgebraHom h2 = hom_from_image_strings(WDp2, WD, {"0", "x"});
    ProductW P = product_of({WD, WD});
    AlgebraHom pairing = pair_into_product(P, {h1, h2});

    RatMatrix block = pairing.matrix() * psi_inv; // E-coords -> (W_D x W_D)-coords
    rep.comparison_bijective = it.dimension_ok && block.rank() == block.rows();

    // the comparison must match the bundle projection id (x) aug with the
    // first product projection
    AlgebraHom proj_ambient = hom_from_generator_images(T, WD, {WD->generator(0), WD->zero()});
    AlgebraHom prE = restrict_hom(it.ft.view(), full_view(WD), proj_ambient);
    rep.projection_compatible = (P.projections[0].matrix() * block == prE.matrix());
    return rep;
}

MicrolinearityReport m_microlinearity_check(size_t n, const AlgebraPtr& W, const Diagram& d) {
    MicrolinearityReport rep;
    Diagram daug = augmented(d);

    std::map<std::string, FiberedTensor> ft;
    for (const auto& [id, alg] : daug.nodes) ft.emplace(id, fibered_tensor(W, alg));

    // ambient: one block of n * dim(T_i) coordinates per node, in map order
    std::map<std::string, size_t> offset;
    size_t total = 0;
    for (const auto& [id, f] : ft) {
        offset.emplace(id, total);
        total += n * f.tensor.algebra->dim();
    }

    RatMatrix sys(0, total);
    // membership of every coordinate in the fibered-tensor subspace
    for (const auto& [id, f] : ft) {
        RatMatrix diff = f.proj_like.matrix() - f.constant.matrix();
        size_t D = f.tensor.algebra->dim();
        for (size_t b = 0; b < n; ++b)
            for (size_t r = 0; r < diff.rows(); ++r) {
                RatVec row(total, Rat(0));
                for (size_t cidx = 0; cidx < D; ++cidx)
                    row[offset.at(id) + b * D + cidx] = diff.at(r, cidx);
                sys.append_row(std::move(row));
            }
    }
    // edge conditions, coordinatewise
    for (const DiagramEdge& e : daug.edges) {
        const FiberedTensor& fu = ft.at(e.from);
        const FiberedTensor& fv = ft.at(e.to);
        AlgebraHom H = tensor_hom(fu.tensor, fv.tensor, AlgebraHom::identity(W), e.hom);
        size_t Du = fu.tensor.algebra->dim(), Dv = fv.tensor.algebra->dim();
        for (size_t b = 0; b < n; ++b)
            for (size_t r = 0; r < Dv; ++r) {
                RatVec row(total, Rat(0));
                for (size_t cidx = 0; cidx < Du; ++cidx)
                    row[offset.at(e.from) + b * Du + cidx] = H.matrix().at(r, cidx);
                row[offset.at(e.to) + b * Dv + r] -= 1;
                sys.append_row(std::move(row));
            }
    }
    RatMatrix ker = sys.kernel();
    std::vector<RatVec> rows;
    for (size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
    LinSubspace model = LinSubspace::span(total, rows);
    rep.dim_left = model.dim();

    // the other side: (R^n (x) W) (x)_M Lim D via the fibered tensor
    LimitResult L2 = finite_limit(d);
    FiberedTensor K = fibered_tensor(W, L2.algebra);
    size_t s = K.algebra->dim();
    rep.dim_right = n * s;

    RatMatrix cmp(total, n * s);
    for (const auto& [id, f] : ft) {
        AlgebraHom leg = (id == "__R") ? augmentation_hom(L2.algebra, terminal())
                                       : L2.cone.legs.at(id);
        RatMatrix M = tensor_hom(K.tensor, f.tensor, AlgebraHom::identity(W), leg).matrix() *
                      K.inclusion.matrix(); // dim(T_id) x s
        size_t D = f.tensor.algebra->dim();
        for (size_t b = 0; b < n; ++b)
            for (size_t r = 0; r < D; ++r)
                for (size_t cidx = 0; cidx < s; ++cidx)
                    cmp.at(offset.at(id) + b * D + r, b * s + cidx) = M.at(r, cidx);
    }
    LinSubspace image = LinSubspace::full(n * s).image_under(cmp);
    rep.bijective = (image == model) && cmp.rank() == n * s;
    return rep;
}

ExponentiabilityReport weil_exponentiability_check(size_t n, const AlgebraPtr& W,
                                                   const AlgebraPtr& W1, const AlgebraPtr& W2) {
    ExponentiabilityReport rep;

    IteratedProlongation ita = iterated_prolongation(n, W, W1);
    rep.step_iterated_W1 = ita.pass();
    AlgebraPtr V1 = ita.ft.algebra; // W (x)~ W1

    IteratedProlongation itb = iterated_prolongation(n, V1, W2);
    rep.step_iterated_W2 = itb.pass();
    rep.dim_left = itb.carrier.dim();

    TensorProduct T12 = tensor_infinity(W1, W2);
    IteratedProlongation itc = iterated_prolongation(n, W, T12.algebra);
    rep.step_final = itc.pass();
    rep.dim_right = itc.carrier.dim();

    // the prop-4-6 step inside the shared triple tensor
    TensorProduct T123 = tensor_infinity(ita.tensor.algebra, W2); // (W (x) W1) (x) W2

    // left: (W (x)~ W1) (x)~ W2 pushed forward along inclusion (x) id
    AlgebraHom J = tensor_hom(itb.tensor, T123, ita.ft.inclusion, AlgebraHom::identity(W2));
    LinSubspace left = itb.ft.space.image_under(J.matrix());

    // right: W (x)~ (W1 (x) W2) as a kernel in the same ambient
    size_t nW = W->presentation().nvars();
    size_t n1 = W1->presentation().nvars();
    size_t n2 = W2->presentation().nvars();
    std::vector<Element> img_a, img_c;
    for (size_t v = 0; v < nW; ++v) {
        img_a.push_back(T12.algebra->zero());
        img_c.push_back(T12.algebra->zero());
    }
    for (size_t v = 0; v < n1; ++v) {
        img_a.push_back(T12.inj1.apply(W1->generator(v)));
        img_c.push_back(T12.algebra->zero());
    }
    for (size_t v = 0; v < n2; ++v) {
        img_a.push_back(T12.inj2.apply(W2->generator(v)));
        img_c.push_back(T12.algebra->zero());
    }
    AlgebraHom a = hom_from_generator_images(T123.algebra, T12.algebra, img_a);
    AlgebraHom c = hom_from_generator_images(T123.algebra, T12.algebra, img_c);
    RatMatrix ker = (a.matrix() - c.matrix()).kernel();
    std::vector<RatVec> rows;
    for (size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
    LinSubspace right = LinSubspace::span(T123.algebra->dim(), rows);

    rep.step_assoc = (left == right);
    return rep;
}

namespace {

Rat random_small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 3);
    return rat(num(rng), den(rng));
}

} // namespace

ProductPreservationReport check_prolong_preserves_fibered_product(size_t n, size_t b, size_t c,
                                                                  const AlgebraPtr& W,
                                                                  uint64_t seed) {
    ProductPreservationReport rep;
    FiberedProlongation whole = fibered_prolong(TrivialBundle{n, b + c}, W);
    FiberedProlongation left = fibered_prolong(TrivialBundle{n, b}, W);
    FiberedProlongation rightp = fibered_prolong(TrivialBundle{n, c}, W);
    rep.dim_product_then_prolong = whole.total_linear_dim;
    rep.dim_prolong_then_product =
        left.total_linear_dim + rightp.total_linear_dim - n; // fibered over R^n

    // prolonged bundle projections applied to sampled points reassemble the
    // original point, and everything commutes with the projection to R^n
    std::mt19937_64 rng(seed);
    std::vector<Expr> projE, projF;
    for (size_t i = 0; i < b; ++i) projE.push_back(ex_var(i));
    for (size_t i = 0; i < c; ++i) projF.push_back(ex_var(b + i));

    rep.point_checks = true;
    for (int trial = 0; trial < 3; ++trial) {
        RatVec base(n);
        for (Rat& q : base) q = random_small_rat(rng);
        std::vector<Element> fiber;
        for (size_t i = 0; i < b + c; ++i) {
            RatVec coords(W->dim());
            for (Rat& q : coords) q = random_small_rat(rng);
            fiber.push_back(W->element(std::move(coords)));
        }
        FiberedPoint p = fibered_point(whole, base, WPoint{W, fiber});
        FiberedPoint pe = apply_fiber_map(projE, p);
        FiberedPoint pf = apply_fiber_map(projF, p);
        if (bundle_projection(pe) != base || bundle_projection(pf) != base) rep.point_checks = false;
        // reassemble
        if (pe.fiber.arity() != b || pf.fiber.arity() != c) rep.point_checks = false;
        for (size_t i = 0; i < b; ++i)
            if (!(pe.fiber.coords[i] == p.fiber.coords[i])) rep.point_checks = false;
        for (size_t i = 0; i < c; ++i)
            if (!(pf.fiber.coords[i] == p.fiber.coords[b + i])) rep.point_checks = false;
    }
    return rep;
}

} // namespace weil
