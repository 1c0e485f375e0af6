#include <doctest.h>

#include "weil/errors.hpp"
#include "weil/tensor.hpp"

using namespace weil;

namespace {

AlgebraPtr build(const std::string& text) {
    return build_weil_algebra(parse_presentation(text));
}

} // namespace

TEST_CASE("tensor dimensions multiply") {
    AlgebraPtr WD = build("x | x^2 ; nil 2");
    AlgebraPtr WD2 = build("x | x^3 ; nil 3");
    CHECK(tensor_infinity(WD, WD).algebra->dim() == 4);
    CHECK(tensor_infinity(WD2, WD).algebra->dim() == 6);
    CHECK(tensor_infinity(WD2, WD2).algebra->dim() == 9);
}

TEST_CASE("the assembled tensor equals the quotient of its presentation") {
    // dual route: build the juxtaposed presentation through row reduction and
    // compare tables entry by entry
    std::vector<std::string> texts = {"| ; nil 1", "x | x^2 ; nil 2", "x | x^3 ; nil 3",
                                      "x,y | x^2, y^2, x*y ; nil 2", "x,y | x^2, y^2 ; nil 3"};
    for (const std::string& t1 : texts)
        for (const std::string& t2 : texts) {
            AlgebraPtr W1 = build(t1), W2 = build(t2);
            TensorProduct T = tensor_infinity(W1, W2);
            AlgebraPtr Q = build_weil_algebra(tensor_presentation(W1, W2));
            REQUIRE(Q->dim() == T.algebra->dim());
            CHECK(Q->basis_labels() == T.algebra->basis_labels());
            for (size_t i = 0; i < Q->dim(); ++i)
                for (size_t j = 0; j < Q->dim(); ++j) CHECK(Q->product(i, j) == T.algebra->product(i, j));
        }
}

TEST_CASE("W_D tensor W_D is W_DxD with renamed variables") {
    AlgebraPtr WD = build("x | x^2 ; nil 2");
    TensorProduct T = tensor_infinity(WD, WD);
    CHECK(T.algebra->dim() == 4);
    CHECK(T.algebra->presentation().vars == std::vector<std::string>{"x", "x_2"});
    // canonical comparison with the named presentation
    AlgebraPtr WDxD = build("x,y | x^2, y^2 ; nil 3");
    AlgebraHom cmp = hom_from_generator_images(
        WDxD, T.algebra, {T.algebra->generator(0), T.algebra->generator(1)});
    CHECK(cmp.is_bijective());
}

TEST_CASE("tensoring with the rationals changes nothing") {
    AlgebraPtr W = build("x,y | x^2, y^2, x*y ; nil 2");
    AlgebraPtr R = build("| ; nil 1");
    TensorProduct T = tensor_infinity(W, R);
    CHECK(T.algebra->dim() == W->dim());
    CHECK(T.inj1.is_bijective());
    TensorProduct T2 = tensor_infinity(R, W);
    CHECK(T2.inj2.is_bijective());
}

TEST_CASE("injections are unit-tensor embeddings") {
    AlgebraPtr WD2 = build("x | x^3 ; nil 3");
    AlgebraPtr WD = build("x | x^2 ; nil 2");
    TensorProduct T = tensor_infinity(WD2, WD);
    Element a = WD2->parse_element("1 + x + 2*x^2");
    Element b = WD->parse_element("1 - x");
    // inj1(a) * inj2(b) multiplies out like a (x) b
    Element prod = multiply(T.inj1.apply(a), T.inj2.apply(b));
    CHECK(prod == T.algebra->parse_element("(1 + x + 2*x^2)*(1 - x_2)"));
}

TEST_CASE("tensor is functorial") {
    AlgebraPtr WD = build("x | x^2 ; nil 2");
    AlgebraPtr WD2 = build("x | x^3 ; nil 3");
    TensorProduct S = tensor_infinity(WD, WD2);
    TensorProduct T = tensor_infinity(WD2, WD);
    AlgebraHom f = hom_from_image_strings(WD, WD2, {"x^2"});
    AlgebraHom g = hom_from_image_strings(WD2, WD, {"x"});
    AlgebraHom fg = tensor_hom(S, T, f, g);
    // check on a decomposable element
    Element lhs = fg.apply(multiply(S.inj1.apply(WD->parse_element("1 + x")),
                                    S.inj2.apply(WD2->parse_element("x + x^2"))));
    Element rhs = multiply(T.inj1.apply(f.apply(WD->parse_element("1 + x"))),
                           T.inj2.apply(g.apply(WD2->parse_element("x + x^2"))));
    CHECK(lhs == rhs);
    // identity tensor identity is the identity
    AlgebraHom idid = tensor_hom(S, S, AlgebraHom::identity(WD), AlgebraHom::identity(WD2));
    CHECK(idid.matrix() == RatMatrix::identity(S.algebra->dim()));
}

TEST_CASE("tensor associativity up to the canonical comparison") {
    std::vector<std::string> texts = {"| ; nil 1", "x | x^2 ; nil 2", "x | x^3 ; nil 3",
                                      "x,y | x^2, y^2, x*y ; nil 2", "x,y | x^2, y^2 ; nil 3"};
    for (const std::string& t1 : texts)
        for (const std::string& t2 : texts)
            for (const std::string& t3 : texts) {
                AlgebraPtr W1 = build(t1), W2 = build(t2), W3 = build(t3);
                TensorProduct L = tensor_infinity(tensor_infinity(W1, W2).algebra, W3);
                TensorProduct R = tensor_infinity(W1, tensor_infinity(W2, W3).algebra);
                REQUIRE(L.algebra->dim() == R.algebra->dim());
                std::vector<Element> images;
                for (size_t v = 0; v < L.algebra->presentation().nvars(); ++v)
                    images.push_back(R.algebra->generator(v));
                AlgebraHom cmp = hom_from_generator_images(L.algebra, R.algebra, images);
                CHECK(cmp.is_bijective());
            }
}
