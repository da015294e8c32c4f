#include "cdbent/spectra.hpp"

#include "cdbent/parallel.hpp"

namespace cdbent {
namespace {

void check_cod_elem(const FnTable& f, elem_t v, const char* what) {
    if (v >= f.cod->q()) fail(errc::bad_param, std::string(what) + " outside the codomain");
}

std::uint32_t mod_p(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % std::int64_t(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace

CycInt walsh1(const FnTable& f, elem_t a, elem_t b) {
    check_cod_elem(f, b, "b");
    const auto& dom = *f.dom;
    const auto& cod = *f.cod;
    const std::uint32_t p = dom.p();
    std::vector<std::int64_t> counts(p, 0);
    for (elem_t x = 0; x < dom.q(); ++x) {
        std::int64_t e = std::int64_t(cod.abs_trace(cod.mul(b, f.table[x]))) -
                         std::int64_t(dom.abs_trace(dom.mul(a, x)));
        ++counts[mod_p(e, p)];
    }
    return CycInt::from_redundant(p, p, counts);
}

CycInt xcorr1(const FnTable& f, const FnTable& g, elem_t c, elem_t u, elem_t b) {
    check_shapes_match(f, g);
    check_cod_elem(f, c, "c");
    check_cod_elem(f, b, "b");
    const auto& dom = *f.dom;
    const auto& cod = *f.cod;
    const std::uint32_t p = dom.p();
    std::vector<std::int64_t> counts(p, 0);
    for (elem_t x = 0; x < dom.q(); ++x) {
        elem_t d = cod.sub(f.table[dom.add(x, u)], cod.mul(c, g.table[x]));
        ++counts[cod.abs_trace(cod.mul(b, d))];
    }
    return CycInt::from_redundant(p, p, counts);
}

CycInt walsh2(const FnTable& f, elem_t a) {
    const auto& dom = *f.dom;
    const std::uint32_t p = dom.p();
    const std::uint32_t qm = f.cod->q();
    const std::uint32_t pm1 = qm / p;  // zeta_p = zeta_{p^m}^{p^{m-1}}
    std::vector<std::int64_t> counts(qm, 0);
    for (elem_t x = 0; x < dom.q(); ++x) {
        std::uint32_t e = sigma(*f.cod, f.table[x]) + pm1 * mod_p(-std::int64_t(dom.abs_trace(dom.mul(a, x))), p);
        ++counts[e % qm];
    }
    return CycInt::from_redundant(qm, p, counts);
}

CycInt xcorr2(const FnTable& f, const FnTable& g, elem_t c, elem_t u) {
    check_shapes_match(f, g);
    check_cod_elem(f, c, "c");
    const auto& dom = *f.dom;
    const auto& cod = *f.cod;
    std::vector<std::int64_t> counts(cod.q(), 0);
    for (elem_t x = 0; x < dom.q(); ++x) {
        elem_t d = cod.sub(f.table[dom.add(x, u)], cod.mul(c, g.table[x]));
        ++counts[sigma(cod, d)];
    }
    return CycInt::from_redundant(cod.q(), dom.p(), counts);
}

CycInt xcorr2_residue(const FnTable& f, const FnTable& g, elem_t c, elem_t u) {
    check_shapes_match(f, g);
    check_cod_elem(f, c, "c");
    const auto& dom = *f.dom;
    const auto& cod = *f.cod;
    const std::uint32_t qm = cod.q();
    std::vector<std::int64_t> counts(qm, 0);
    for (elem_t x = 0; x < dom.q(); ++x) {
        std::int64_t e = std::int64_t(sigma(cod, f.table[dom.add(x, u)])) -
                         std::int64_t(sigma(cod, cod.mul(c, g.table[x])));
        e %= qm;
        if (e < 0) e += qm;
        ++counts[static_cast<std::uint32_t>(e)];
    }
    return CycInt::from_redundant(qm, dom.p(), counts);
}

Spectrum1 full_walsh1(const FnTable& f, unsigned workers) {
    const std::uint64_t slots = std::uint64_t(f.q_dom()) * f.q_cod();
    if (slots > spectrum_slot_bound)
        fail(errc::too_large, "spectrum table would need " + std::to_string(slots) + " slots");
    Spectrum1 s;
    s.dom = f.dom;
    s.cod = f.cod;
    // workers fill disjoint slots of the preallocated table
    s.values.assign(slots, CycInt::zero(f.dom->p(), f.dom->p()));
    parallel_for(0, slots, workers, [&](std::uint64_t slot) {
        elem_t a = static_cast<elem_t>(slot / f.q_cod());
        elem_t b = static_cast<elem_t>(slot % f.q_cod());
        s.values[slot] = walsh1(f, a, b);
    });
    if (s.at(0, 0) != CycInt::constant(f.dom->p(), f.dom->p(), f.q_dom()))
        fail(errc::bad_param, "walsh1 table failed the (0,0) = p^n invariant");
    return s;
}

Spectrum2 full_walsh2(const FnTable& f, unsigned workers) {
    if (f.q_dom() > spectrum_slot_bound)
        fail(errc::too_large, "spectrum table too large");
    Spectrum2 s;
    s.dom = f.dom;
    s.cod = f.cod;
    s.values.assign(f.q_dom(), CycInt::zero(f.q_cod(), f.dom->p()));
    parallel_for(0, f.q_dom(), workers,
                 [&](std::uint64_t a) { s.values[a] = walsh2(f, static_cast<elem_t>(a)); });
    // inverse-transform check at x = 0
    CycInt sum = CycInt::zero(f.q_cod(), f.dom->p());
    for (const auto& v : s.values) sum += v;
    CycInt expect =
        CycInt::root_power(f.q_cod(), f.dom->p(), sigma(*f.cod, f.table[0])).scaled(f.q_dom());
    if (sum != expect) fail(errc::bad_param, "walsh2 table failed the inverse-transform invariant");
    return s;
}

Lemma1Data lemma1_data(const FnTable& f, const FnTable& g, elem_t c) {
    check_shapes_match(f, g);
    check_cod_elem(f, c, "c");
    Lemma1Data d;
    d.dom = f.dom;
    d.cod = f.cod;
    d.c = c;
    const std::uint32_t qn = f.q_dom(), qm = f.q_cod();
    d.wf.resize(qm);
    d.wg_bc.resize(qm);
    d.corr.resize(qm);
    for (elem_t b = 0; b < qm; ++b) {
        elem_t bc = f.cod->mul(b, c);
        d.wf[b].reserve(qn);
        d.wg_bc[b].reserve(qn);
        d.corr[b].reserve(qn);
        for (elem_t x = 0; x < qn; ++x) d.wf[b].push_back(walsh1(f, x, b));
        for (elem_t x = 0; x < qn; ++x) d.wg_bc[b].push_back(walsh1(g, x, bc));
        for (elem_t u = 0; u < qn; ++u) d.corr[b].push_back(xcorr1(f, g, c, u, b));
    }
    return d;
}

bool lemma1_holds(const Lemma1Data& d) {
    const auto& dom = *d.dom;
    const std::uint32_t p = dom.p(), qn = dom.q();
    const CycInt qn_const = CycInt::constant(p, p, qn);
    for (elem_t b = 0; b < d.cod->q(); ++b) {
        std::vector<CycInt> prod;
        prod.reserve(qn);
        for (elem_t x = 0; x < qn; ++x) prod.push_back(d.wf[b][x] * d.wg_bc[b][x].conj());
        for (elem_t x = 0; x < qn; ++x) {
            CycInt lhs = CycInt::zero(p, p);
            for (elem_t u = 0; u < qn; ++u) {
                std::uint32_t e = mod_p(-std::int64_t(dom.abs_trace(dom.mul(u, x))), p);
                lhs += d.corr[b][u] * CycInt::root_power(p, p, e);
            }
            if (lhs != prod[x]) return false;
        }
        for (elem_t u = 0; u < qn; ++u) {
            CycInt rhs = CycInt::zero(p, p);
            for (elem_t x = 0; x < qn; ++x)
                rhs += prod[x] * CycInt::root_power(p, p, dom.abs_trace(dom.mul(u, x)));
            if (d.corr[b][u] * qn_const != rhs) return false;
        }
    }
    return true;
}

bool verify_lemma1(const FnTable& f, const FnTable& g, elem_t c) {
    return lemma1_holds(lemma1_data(f, g, c));
}

Lemma2Data lemma2_data(const FnTable& f, const FnTable& g, elem_t c) {
    check_shapes_match(f, g);
    check_cod_elem(f, c, "c");
    Lemma2Data d;
    d.dom = f.dom;
    d.cod = f.cod;
    d.c = c;
    FnTable cg{g.dom, g.cod, {}};
    cg.table.reserve(g.table.size());
    for (elem_t v : g.table) cg.table.push_back(g.cod->mul(c, v));
    const std::uint32_t qn = f.q_dom();
    d.wf.reserve(qn);
    d.wcg.reserve(qn);
    d.corr.reserve(qn);
    for (elem_t x = 0; x < qn; ++x) d.wf.push_back(walsh2(f, x));
    for (elem_t x = 0; x < qn; ++x) d.wcg.push_back(walsh2(cg, x));
    for (elem_t u = 0; u < qn; ++u) d.corr.push_back(xcorr2_residue(f, g, c, u));
    return d;
}

bool lemma2_holds(const Lemma2Data& d) {
    const auto& dom = *d.dom;
    const std::uint32_t p = dom.p(), qn = dom.q(), qm = d.cod->q();
    const std::uint32_t pm1 = qm / p;
    const CycInt qn_const = CycInt::constant(qm, p, qn);
    std::vector<CycInt> prod;
    prod.reserve(qn);
    for (elem_t x = 0; x < qn; ++x) prod.push_back(d.wf[x] * d.wcg[x].conj());
    for (elem_t x = 0; x < qn; ++x) {
        CycInt lhs = CycInt::zero(qm, p);
        for (elem_t u = 0; u < qn; ++u) {
            std::uint32_t e = pm1 * mod_p(-std::int64_t(dom.abs_trace(dom.mul(u, x))), p);
            lhs += d.corr[u] * CycInt::root_power(qm, p, e);
        }
        if (lhs != prod[x]) return false;
    }
    for (elem_t u = 0; u < qn; ++u) {
        CycInt rhs = CycInt::zero(qm, p);
        for (elem_t x = 0; x < qn; ++x) {
            std::uint32_t e = pm1 * dom.abs_trace(dom.mul(u, x));
            rhs += prod[x] * CycInt::root_power(qm, p, e);
        }
        if (d.corr[u] * qn_const != rhs) return false;
    }
    return true;
}

bool verify_lemma2(const FnTable& f, const FnTable& g, elem_t c) {
    return lemma2_holds(lemma2_data(f, g, c));
}

}  // namespace cdbent
