#pragma once

#include "segrekit/segre.hpp"

#include <random>
#include <vector>

namespace testsupport {

using namespace segrekit;

inline GaussRational rand_scalar(std::mt19937& rng, bool real = false)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    Rational re(num(rng), den(rng));
    re.canonicalize();
    if (real)
        return GaussRational(re);
    Rational im(num(rng), den(rng));
    im.canonicalize();
    return GaussRational(re, im);
}

inline USeries rand_series(std::mt19937& rng, int trunc, int from = 0, bool real = false,
                           double density = 0.7)
{
    std::bernoulli_distribution keep(density);
    USeries s(trunc, "w");
    for (int d = from; d < trunc; ++d)
        if (keep(rng))
            s.set(d, rand_scalar(rng, real));
    return s;
}

inline USeries rand_unit(std::mt19937& rng, int trunc)
{
    USeries s = rand_series(rng, trunc, 1);
    s.set(0, GaussRational(1));
    return s;
}

// schoolbook product of the dense coefficient vectors, no truncation bookkeeping
inline std::vector<GaussRational> dense_product(const USeries& a, const USeries& b, int n)
{
    std::vector<GaussRational> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + j < n; ++j)
            out[i + j] += a.coeff(i) * b.coeff(j);
    return out;
}

inline TriSeries rand_tri(std::mt19937& rng, TriSeries::Truncs t, double density = 0.4)
{
    std::bernoulli_distribution keep(density);
    TriSeries s(t);
    for (int k = 0; k < t[0]; ++k)
        for (int l = 0; l < t[1]; ++l)
            for (int j = 0; j < t[2]; ++j)
                if (keep(rng))
                    s.set({k, l, j}, rand_scalar(rng));
    return s;
}

// random data with a, b real; c complex
inline RealStructureData rand_real_data(std::mt19937& rng, int m, int trunc)
{
    RealStructureData d;
    d.m = m;
    d.a = rand_series(rng, trunc, 0, true, 0.5);
    d.b = rand_series(rng, trunc, 0, true, 0.5);
    d.c = rand_series(rng, trunc, 0, false, 0.5);
    return d;
}

inline P0Ode truncated(P0Ode o, int n)
{
    for (USeries* s : {&o.A, &o.B, &o.C, &o.D, &o.E, &o.F})
        *s = s->truncated(n);
    return o;
}

}  // namespace testsupport
