#include <doctest.h>

#include "weil/errors.hpp"
#include "weil/matrix.hpp"

using namespace weil;

namespace {

RatMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rat(rows[i][j]);
    return m;
}

} // namespace

TEST_CASE("rref reaches the canonical form") {
    RatMatrix m = from_rows({{2, 4, 6}, {1, 2, 4}});
    auto pivots = m.rref();
    CHECK(pivots == std::vector<size_t>{0, 2});
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 2);
    CHECK(m.at(0, 2) == 0);
    CHECK(m.at(1, 2) == 1);
}

TEST_CASE("kernel vectors annihilate the matrix") {
    RatMatrix m = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
    RatMatrix k = m.kernel();
    CHECK(k.rows() == 2);
    for (size_t r = 0; r < k.rows(); ++r) CHECK(is_zero_vec(m.apply(k.row(r))));
    CHECK(m.rank() + k.rows() == m.cols());
}

TEST_CASE("solve and inverse") {
    RatMatrix m = from_rows({{2, 1}, {1, 1}});
    auto x = m.solve({Rat(3), Rat(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    RatMatrix inv = m.inverse();
    CHECK(inv * m == RatMatrix::identity(2));
    CHECK(!from_rows({{1, 2}, {2, 4}}).solve({Rat(1), Rat(0)}).has_value());
    CHECK_THROWS_AS(from_rows({{1, 2}, {2, 4}}).inverse(), MismatchError);
}

TEST_CASE("subspace algebra") {
    LinSubspace a = LinSubspace::span(3, {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}});
    LinSubspace b = LinSubspace::span(3, {{Rat(1), Rat(1), Rat(1)}});
    CHECK(a.dim() == 2);
    CHECK(a.contains({Rat(2), Rat(3), Rat(2)}));
    CHECK(!a.contains({Rat(1), Rat(0), Rat(0)}));
    LinSubspace meet = a.intersect(b);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains({Rat(1), Rat(1), Rat(1)}));

    // coords_of inverts the echelon expansion
    RatVec v = {Rat(5), Rat(-2), Rat(5)};
    RatVec c = a.coords_of(v);
    RatVec back(3, Rat(0));
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < 3; ++j) back[j] += c[i] * a.rows().at(i, j);
    CHECK(back == v);
    CHECK_THROWS_AS(a.coords_of({Rat(1), Rat(0), Rat(0)}), MismatchError);

    // span equality is canonical-form equality
    LinSubspace a2 = LinSubspace::span(
        3, {{Rat(2), Rat(2), Rat(2)}, {Rat(0), Rat(1), Rat(0)}, {Rat(2), Rat(3), Rat(2)}});
    CHECK(a == a2);
}
