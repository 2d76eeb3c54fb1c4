#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include <gtest/gtest.h>

#include "qk/cache.hpp"
#include "qk/recursion.hpp"
#include "qk/serialize.hpp"
#include "qk/series.hpp"
#include "qk/table.hpp"
#include "qk/wpoly.hpp"

using namespace qk;

namespace
{

QSeries random_series(std::mt19937 &g, int D, bool unit = false)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    QSeries s(D);
    for (int i = 0; i <= D; ++i) {
        s[i] = Rat(num(g), den(g));
    }
    if (unit) {
        s[0] = Rat(1);
    }
    return s;
}

LogSeries random_log(std::mt19937 &g, int D, int maxlog)
{
    LogSeries f(D, maxlog);
    for (int i = 0; i <= maxlog; ++i) {
        f[i] = random_series(g, D);
    }
    return f;
}

} // namespace

TEST(Rat, CanonicalForm)
{
    EXPECT_EQ(Rat(6, 4), Rat(3, 2));
    EXPECT_EQ(Rat(-6, 4).str(), "-3/2");
    EXPECT_EQ(Rat(3, -6).num_str(), "-1");
    EXPECT_EQ(Rat::parse("10/-4"), Rat(-5, 2));
    EXPECT_THROW(Rat(1, 0), std::domain_error);
    EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
    EXPECT_THROW(Rat::parse("1/x"), std::invalid_argument);
}

TEST(Rat, Factorials)
{
    EXPECT_EQ(factorial(10), Rat(3628800));
    EXPECT_EQ(binomial(10, 3), Rat(120));
    EXPECT_EQ(Rat(2).pow(-3), Rat(1, 8));
}

TEST(QSeries, SpecExamples)
{
    const QSeries a(4, {Rat(1), Rat(1)});
    const QSeries b(4, {Rat(1), Rat(-1)});
    EXPECT_EQ(a * b, QSeries(4, {Rat(1), Rat(0), Rat(-1)}));
    EXPECT_EQ(a.log().exp(), a);
    EXPECT_EQ(QSeries(3, {Rat(1), Rat(-1)}).inverse(), QSeries(3, {Rat(1), Rat(1), Rat(1), Rat(1)}));
}

TEST(QSeries, Errors)
{
    EXPECT_THROW(QSeries(3, {Rat(0), Rat(1)}).inverse(), std::domain_error);
    EXPECT_THROW(QSeries(3, {Rat(2), Rat(1)}).log(), std::domain_error);
    EXPECT_THROW(QSeries(3, {Rat(1), Rat(1)}).exp(), std::domain_error);
}

TEST(QSeries, TruncationIsMinimum)
{
    const QSeries a(5, {Rat(1), Rat(2)});
    const QSeries b(3, {Rat(1), Rat(1)});
    EXPECT_EQ((a * b).order(), 3);
    EXPECT_EQ((a + b).order(), 3);
}

TEST(QSeries, RingAxiomsRandomized)
{
    std::mt19937 g(20261015);
    for (int it = 0; it < 25; ++it) {
        const QSeries a = random_series(g, 6), b = random_series(g, 6), c = random_series(g, 6);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        const QSeries u = random_series(g, 6, true);
        EXPECT_EQ(u * u.inverse(), QSeries::constant(6, Rat(1)));
        EXPECT_EQ(u.log().exp(), u);
        EXPECT_EQ((u * u).log(), Rat(2) * u.log());
        EXPECT_EQ(u.pow(Rat(1, 2)).pow(2), u);
    }
}

TEST(LogSeries, LeibnizRandomized)
{
    std::mt19937 g(7);
    for (int it = 0; it < 15; ++it) {
        const LogSeries f = random_log(g, 5, 2), h = random_log(g, 5, 3);
        EXPECT_EQ((f * h).deriv(), f.deriv() * h + f * h.deriv());
        EXPECT_EQ(f.integrate().deriv(), f);
    }
}

TEST(LogSeries, ShiftMultipliesByExp)
{
    // e^x * x q = x q^2 and its derivative obeys d(e^x f) = e^x (D + 1) f
    const LogSeries f = LogSeries::monomial(4, 1, 1);
    EXPECT_EQ(f.shift(1), LogSeries::monomial(4, 1, 2));
    EXPECT_EQ(f.shift(1).deriv(), (f.deriv() + f).shift(1));
}

TEST(ExpReversion, Identity)
{
    LogSeries t(4, 1);
    t[1] = QSeries::constant(4, Rat(1));
    EXPECT_EQ(exp_reversion(t), t);
}

TEST(ExpReversion, SingleTermMatchesLambertW)
{
    // x = t - W(c e^t); the series starts -c e^t + c^2 e^{2t} - (3/2) c^3 e^{3t}
    const Rat c(2, 3);
    LogSeries t(5, 1);
    t[1] = QSeries::constant(5, Rat(1));
    t[0][1] = c;
    const QSeries e = exp_reversion(t)[0];
    EXPECT_EQ(e[1], -c);
    EXPECT_EQ(e[2], c.pow(2));
    EXPECT_EQ(e[3], Rat(-3, 2) * c.pow(3));
    EXPECT_EQ(e[4], Rat(8, 3) * c.pow(4));
    // substitute back: t(x(t)) - t = e + c Q e^{e} = 0
    EXPECT_TRUE((e + compose_exp(t[0], e)).is_zero());
}

TEST(ExpReversion, QuinticMirrorMapRoundTrips)
{
    const int D = 5;
    const ConstantTable vt = virtual_table(5, 5, D);
    LogSeries t(D, 1);
    t[1] = QSeries::constant(D, Rat(1));
    for (int d = 1; d <= D; ++d) {
        t[0][d] = vt.at(d, 1) / Rat(d);
    }
    EXPECT_EQ(t[0][1], Rat(770));
    const QSeries e = exp_reversion(t)[0];
    EXPECT_TRUE((e + compose_exp(t[0], e)).is_zero());
    // other direction: x(t(x)) = x
    EXPECT_TRUE((t[0] + compose_exp(e, t[0])).is_zero());
}

TEST(ExpReversion, RejectsWrongShape)
{
    LogSeries t(3, 1);
    t[1] = QSeries::constant(3, Rat(2));
    EXPECT_THROW(exp_reversion(t), std::invalid_argument);
    LogSeries u(3, 1);
    u[1] = QSeries::constant(3, Rat(1));
    u[0][0] = Rat(1);
    EXPECT_THROW(exp_reversion(u), std::invalid_argument);
}

TEST(WPoly, ZBasisIsExact)
{
    // p(w) = sum_j c_j (1 + d w)^j  <=>  to_z_basis(p, d) = sum c_j z^j
    const int d = 3;
    const RatWPoly z{Rat(5), Rat(-2), Rat(7, 3)};
    RatWPoly p;
    for (int j = 0; j <= z.degree(); ++j) {
        p += z.coeff(j) * RatWPoly::linear(Rat(1), Rat(d)).pow(j);
    }
    EXPECT_EQ(to_z_basis(p, d), z);
}

TEST(WPoly, RingAxiomsRandomized)
{
    std::mt19937 g(3);
    std::uniform_int_distribution<int> num(-6, 6);
    auto rnd = [&] { return RatWPoly{Rat(num(g)), Rat(num(g)), Rat(num(g), 7)}; };
    for (int it = 0; it < 20; ++it) {
        const RatWPoly a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(ConstantTable, RealRange)
{
    const ConstantTable t(7, 5, 3, Flavor::real);
    EXPECT_EQ(t.row(1).size(), 5u);
    EXPECT_EQ(t.row(2).size(), 3u);
    EXPECT_EQ(t.row(3).size(), 1u);
    EXPECT_THROW(ConstantTable(7, 5, 3, Flavor::real).set(3, 1, Rat(1)), std::out_of_range);
    EXPECT_EQ(t.at(9, 9), Rat(0));
}

TEST(Serialize, RationalsAreStrings)
{
    const Json j = to_json(Rat(-7, 3));
    EXPECT_EQ(j.dump(), R"({"n":"-7","d":"3"})");
    EXPECT_EQ(rat_from_json(j), Rat(-7, 3));
    EXPECT_THROW(rat_from_json(Json{{"n", 1}, {"d", 2}}), std::invalid_argument);
}

TEST(Serialize, TableRoundTrip)
{
    for (const auto &t : {virtual_table(7, 5, 3), virtual_table(3, 5, 3), virtual_table(5, 5, 2).reflavored(Flavor::virtual_)}) {
        EXPECT_EQ(table_from_json(Json::parse(to_json(t).dump())), t);
    }
    ConstantTable r(9, 5, 2, Flavor::real);
    r.set(1, 3, Rat(-1, 12345678901LL));
    EXPECT_EQ(table_from_json(Json::parse(to_json(r).dump())), r);
}

TEST(Serialize, Sha256KnownVectors)
{
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Serialize, DocumentHashCoversResult)
{
    const Json res{{"x", to_json(Rat(5))}};
    const Json doc = make_document("table", "m", Json{{"N", 1}}, res);
    EXPECT_EQ(doc["metadata"]["content_hash"], sha256_hex(res.dump()));
    EXPECT_EQ(doc["metadata"]["engine_version"], engine_version);
}

TEST(Cache, StoreLoadAndKeying)
{
    const auto dir = std::filesystem::temp_directory_path() / ("qk_core_cache_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    const ResultCache cache(dir);
    const JobKey a{"table", 7, 5, 3, -1, "real"};
    JobKey b = a;
    b.flavor = "virtual";
    EXPECT_NE(a.digest(), b.digest());
    EXPECT_FALSE(cache.load(a));
    ASSERT_TRUE(cache.store(a, "{\"v\": 1}\n"));
    EXPECT_EQ(*cache.load(a), "{\"v\": 1}\n");
    EXPECT_FALSE(cache.load(b));
    // no temp files left behind
    int files = 0;
    for (const auto &e : std::filesystem::directory_iterator(dir)) {
        EXPECT_EQ(e.path().extension(), ".json");
        ++files;
    }
    EXPECT_EQ(files, 1);
    // corrupt entries read as misses
    std::ofstream(cache.path_for(a)) << "{trunc";
    EXPECT_FALSE(cache.load(a));
    std::filesystem::remove_all(dir);
}

TEST(Cache, EmptyDirectoryDisablesCache)
{
    const ResultCache cache{std::filesystem::path()};
    const JobKey a{"table", 7, 5, 3, -1, "real"};
    EXPECT_FALSE(cache.store(a, "{}"));
    EXPECT_FALSE(cache.load(a));
}
