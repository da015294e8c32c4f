#include "cdbent/analysis.hpp"

#include <stdexcept>

namespace cdbent {
namespace {

void check_c(const FnTable& f, elem_t c) {
    if (c >= f.cod->q()) fail(errc::bad_param, "c outside the codomain");
}

std::uint64_t ddt_slots(const FnTable& f) { return std::uint64_t(f.q_dom()) * f.q_cod(); }

Witness wit_ub(elem_t u, elem_t b) {
    Witness w;
    w.u = u;
    w.b = b;
    return w;
}

Witness wit_xb(elem_t x, elem_t b) {
    Witness w;
    w.x = x;
    w.b = b;
    return w;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::automatic: return "automatic";
        case Method::definition: return "definition";
        case Method::balance: return "balance";
        case Method::profile: return "profile";
    }
    return "?";
}

DdtTable c_ddt(const FnTable& f, elem_t c) {
    check_c(f, c);
    if (ddt_slots(f) > spectrum_slot_bound) fail(errc::too_large, "DDT table too large");
    DdtTable t;
    t.dom = f.dom;
    t.cod = f.cod;
    t.c = c;
    t.counts.assign(ddt_slots(f), 0);
    const auto& dom = *f.dom;
    const auto& cod = *f.cod;
    for (elem_t a = 0; a < dom.q(); ++a) {
        auto* row = &t.counts[std::size_t(a) * cod.q()];
        for (elem_t x = 0; x < dom.q(); ++x)
            ++row[cod.sub(f.table[dom.add(x, a)], cod.mul(c, f.table[x]))];
    }
    return t;
}

std::uint32_t c_uniformity(const DdtTable& t) {
    std::uint32_t best = 0;
    const std::uint32_t qm = t.cod->q();
    for (elem_t a = (t.c == 1 ? 1 : 0); a < t.dom->q(); ++a)
        for (elem_t b = 0; b < qm; ++b) best = std::max(best, t.at(a, b));
    return best;
}

std::uint32_t c_uniformity(const FnTable& f, elem_t c) { return c_uniformity(c_ddt(f, c)); }

bool is_pcn(const FnTable& f, elem_t c) {
    bool by_delta = c_uniformity(f, c) == 1;
    if (f.dom->same_field(*f.cod)) {
        // cross-check: every legal c-derivative is a permutation polynomial
        const auto& dom = *f.dom;
        const auto& cod = *f.cod;
        bool by_perm = true;
        std::vector<bool> seen(cod.q());
        for (elem_t a = (c == 1 ? 1 : 0); a < dom.q() && by_perm; ++a) {
            std::fill(seen.begin(), seen.end(), false);
            for (elem_t x = 0; x < dom.q(); ++x) {
                elem_t v = cod.sub(f.table[dom.add(x, a)], cod.mul(c, f.table[x]));
                if (seen[v]) {
                    by_perm = false;
                    break;
                }
                seen[v] = true;
            }
        }
        if (by_perm != by_delta)
            throw std::logic_error("PcN cross-check disagreed with the DDT route");
    }
    return by_delta;
}

bool is_apcn(const FnTable& f, elem_t c) { return c_uniformity(f, c) == 2; }

namespace {

Verdict perfect1_balance_impl(const FnTable& f, elem_t c, bool strict) {
    const auto& dom = *f.dom;
    const auto& cod = *f.cod;
    const std::uint32_t p = dom.p();
    const std::uint32_t fiber = dom.q() / p;
    std::vector<std::uint32_t> cnt(p);
    Verdict v;
    v.method = Method::balance;
    v.value = true;
    for (elem_t u = strict ? 0 : 1; u < dom.q(); ++u) {
        for (elem_t b = 1; b < cod.q(); ++b) {
            std::fill(cnt.begin(), cnt.end(), 0);
            for (elem_t x = 0; x < dom.q(); ++x) {
                elem_t d = cod.sub(f.table[dom.add(x, u)], cod.mul(c, f.table[x]));
                ++cnt[cod.abs_trace(cod.mul(b, d))];
            }
            for (std::uint32_t t = 0; t < p; ++t)
                if (cnt[t] != fiber) {
                    v.value = false;
                    v.witness = wit_ub(u, b);
                    v.witness->count = cnt[t];
                    return v;
                }
        }
    }
    return v;
}

Verdict perfect1_definition_impl(const FnTable& f, elem_t c, bool strict) {
    Verdict v;
    v.method = Method::definition;
    v.value = true;
    for (elem_t u = strict ? 0 : 1; u < f.q_dom(); ++u)
        for (elem_t b = 1; b < f.q_cod(); ++b)
            if (!xcorr1(f, f, c, u, b).is_zero()) {
                v.value = false;
                v.witness = wit_ub(u, b);
                return v;
            }
    return v;
}

}  // namespace

Verdict is_perfect1(const FnTable& f, elem_t c, bool strict, Method m) {
    check_c(f, c);
    switch (m) {
        case Method::automatic:
        case Method::balance:
            return perfect1_balance_impl(f, c, strict);
        case Method::definition:
            return perfect1_definition_impl(f, c, strict);
        default:
            fail(errc::bad_param, "perfect1 supports the balance and definition methods");
    }
}

Verdict is_bent1_by_balance(const FnTable& f, elem_t c) {
    check_c(f, c);
    return perfect1_balance_impl(f, c, /*strict=*/false);
}

Verdict is_bent1(const FnTable& f, elem_t c, Method m) {
    check_c(f, c);
    if (m == Method::automatic) m = (c == 1) ? Method::definition : Method::balance;
    if (m == Method::balance) return is_bent1_by_balance(f, c);
    if (m != Method::definition) fail(errc::bad_param, "bent1 supports the balance and definition methods");

    Verdict v;
    v.method = Method::definition;
    v.value = true;
    const std::uint32_t qn = f.q_dom();
    for (elem_t b = 1; b < f.q_cod(); ++b) {
        const elem_t bc = f.cod->mul(b, c);
        const CycInt rhs = xcorr1(f, f, c, 0, b);
        for (elem_t x = 0; x < qn; ++x) {
            if (walsh1(f, x, b) * walsh1(f, x, bc).conj() != rhs) {
                v.value = false;
                v.witness = wit_xb(x, b);
                return v;
            }
        }
    }
    return v;
}

namespace {

Verdict perfect2_profile_impl(const FnTable& f, elem_t c, bool strict) {
    const std::uint32_t p = f.dom->p();
    const std::uint32_t pm1 = f.q_cod() / p;
    Verdict v;
    v.method = Method::profile;
    v.value = true;
    for (elem_t u = strict ? 0 : 1; u < f.q_dom(); ++u) {
        SupportProfile2 prof = support_profile2(f, c, u);
        for (std::uint32_t j = 0; j < pm1; ++j) {
            const std::uint32_t ref = prof.counts[j + pm1 * (p - 1)];
            for (std::uint32_t l = 0; l + 1 < p; ++l)
                if (prof.counts[j + pm1 * l] != ref) {
                    v.value = false;
                    v.witness = wit_ub(u, j + pm1 * l);
                    v.witness->count = prof.counts[j + pm1 * l];
                    return v;
                }
        }
    }
    return v;
}

Verdict perfect2_definition_impl(const FnTable& f, elem_t c, bool strict) {
    Verdict v;
    v.method = Method::definition;
    v.value = true;
    for (elem_t u = strict ? 0 : 1; u < f.q_dom(); ++u)
        if (!xcorr2(f, f, c, u).is_zero()) {
            v.value = false;
            v.witness = Witness{};
            v.witness->u = u;
            return v;
        }
    return v;
}

}  // namespace

SupportProfile2 support_profile2(const FnTable& f, elem_t c, elem_t u) {
    check_c(f, c);
    const auto& dom = *f.dom;
    const auto& cod = *f.cod;
    SupportProfile2 prof;
    prof.c = c;
    prof.u = u;
    prof.counts.assign(cod.q(), 0);
    for (elem_t x = 0; x < dom.q(); ++x)
        ++prof.counts[sigma(cod, cod.sub(f.table[dom.add(x, u)], cod.mul(c, f.table[x])))];
    return prof;
}

Verdict perfect2_by_profile(const FnTable& f, elem_t c) {
    check_c(f, c);
    return perfect2_profile_impl(f, c, /*strict=*/false);
}

Verdict is_perfect2(const FnTable& f, elem_t c, bool strict, Method m) {
    check_c(f, c);
    switch (m) {
        case Method::automatic:
        case Method::profile:
            return perfect2_profile_impl(f, c, strict);
        case Method::definition:
            return perfect2_definition_impl(f, c, strict);
        default:
            fail(errc::bad_param, "perfect2 supports the profile and definition methods");
    }
}

Verdict is_bent2(const FnTable& f, elem_t c) {
    check_c(f, c);
    FnTable cf{f.dom, f.cod, {}};
    cf.table.reserve(f.table.size());
    for (elem_t v : f.table) cf.table.push_back(f.cod->mul(c, v));

    Verdict v;
    v.method = Method::definition;
    v.value = true;
    const CycInt rhs = xcorr2(f, f, c, 0);
    for (elem_t x = 0; x < f.q_dom(); ++x) {
        if (walsh2(f, x) * walsh2(cf, x).conj() != rhs) {
            v.value = false;
            v.witness = Witness{};
            v.witness->x = x;
            return v;
        }
    }
    return v;
}

ZeroCReport zero_c_characterization(const FnTable& f) {
    ZeroCReport r;
    r.bent1_at_zero = is_bent1(f, 0, Method::definition).value;
    r.walsh1_row0_vanishes = true;
    for (elem_t b = 1; b < f.q_cod(); ++b)
        if (!walsh1(f, 0, b).is_zero()) {
            r.walsh1_row0_vanishes = false;
            break;
        }
    if (f.dom->same_field(*f.cod)) r.permutation = is_permutation(f);
    r.bent2_at_zero = is_bent2(f, 0).value;
    r.walsh2_at_zero_is_zero = walsh2(f, 0).is_zero();

    r.consistent = (r.bent1_at_zero == r.walsh1_row0_vanishes) &&
                   (r.bent2_at_zero == r.walsh2_at_zero_is_zero) &&
                   (!r.permutation.has_value() || *r.permutation == r.walsh1_row0_vanishes);
    return r;
}

DoForm do_decompose(const FnTable& f) {
    if (!f.dom->same_field(*f.cod)) fail(errc::domain_mismatch, "DO decomposition needs dom = cod");
    const auto& F = *f.dom;
    const std::uint32_t q = F.q(), n = F.n(), p = F.p();

    // interpolate the unique reduced polynomial for the table
    std::vector<elem_t> coef(q, 0);
    coef[0] = f.table[0];
    for (std::uint32_t d = 1; d + 1 < q; ++d) {
        elem_t s = 0;
        for (elem_t x = 1; x < q; ++x) s = F.add(s, F.mul(f.table[x], F.pow(F.inv(x), d)));
        coef[d] = F.neg(s);
    }
    elem_t s = 0;
    for (elem_t x = 0; x < q; ++x) s = F.add(s, f.table[x]);
    coef[q - 1] = F.neg(s);

    // the support must consist of exponents p^i + p^j
    DoForm form;
    form.ctx = f.dom;
    form.a.assign(std::size_t(n) * n, 0);
    for (std::uint32_t d = 0; d < q; ++d) {
        if (!coef[d]) continue;
        // decide whether d = p^i + p^j and recover (i, j), i <= j. For odd p
        // the base-p digits show either a single 2 or two 1s; for p = 2 the
        // diagonal case carries, leaving a single 1 at position i+1.
        std::uint32_t e = d, two_at = UINT32_MAX, ones = 0, i1 = 0, i2 = 0;
        bool ok = true;
        for (std::uint32_t pos = 0; pos < n && ok; ++pos) {
            std::uint32_t digit = e % p;
            e /= p;
            if (digit == 0) continue;
            if (digit == 2 && p > 2 && two_at == UINT32_MAX && ones == 0)
                two_at = pos;
            else if (digit == 1 && ones < 2 && two_at == UINT32_MAX) {
                (ones == 0 ? i1 : i2) = pos;
                ++ones;
            } else
                ok = false;
        }
        if (e != 0) ok = false;
        std::uint32_t i, j;
        if (ok && two_at != UINT32_MAX && ones == 0) {
            i = j = two_at;
        } else if (ok && two_at == UINT32_MAX && ones == 2) {
            i = i1;
            j = i2;
        } else if (ok && p == 2 && ones == 1 && i1 >= 1) {
            i = j = i1 - 1;  // 2^{i+1} = 2^i + 2^i
        } else {
            fail(errc::not_do_polynomial,
                 "exponent " + std::to_string(d) + " in the reduced support is not p^i + p^j");
        }
        form.a[std::size_t(i) * n + j] = coef[d];
    }

    // invariant: the form reproduces the input table
    FnTable back = do_form_table(form);
    if (back.table != f.table) throw std::logic_error("DO decomposition failed to reproduce the table");
    return form;
}

FnTable do_form_table(const DoForm& d) {
    const auto& F = *d.ctx;
    const std::uint32_t n = F.n();
    FnTable f;
    f.dom = d.ctx;
    f.cod = d.ctx;
    f.table.assign(F.q(), 0);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j) {
            elem_t a = d.at(i, j);
            if (!a) continue;
            std::uint64_t e = 0;
            std::uint64_t pi = 1, pj = 1;
            for (std::uint32_t t = 0; t < i; ++t) pi *= F.p();
            for (std::uint32_t t = 0; t < j; ++t) pj *= F.p();
            e = pi + pj;
            for (elem_t x = 0; x < F.q(); ++x)
                f.table[x] = F.add(f.table[x], F.mul(a, F.pow(x, e)));
        }
    return f;
}

elem_t DoCompanion::eval(elem_t b) const {
    const auto& F = *ctx;
    const std::uint32_t n = F.n();
    elem_t acc = 0;
    std::uint64_t pr = 1;
    for (std::uint32_t r = 0; r < n; ++r) {
        acc = F.add(acc, F.pow(F.mul(coeffs[n - 1 - r], b), pr));
        pr *= F.p();
    }
    return acc;
}

DoCompanion do_companion(const DoForm& d, elem_t u) {
    if (u == 0) fail(errc::bad_param, "companion needs u != 0");
    const auto& F = *d.ctx;
    const std::uint32_t n = F.n();
    DoCompanion comp;
    comp.ctx = d.ctx;
    comp.u = u;
    comp.coeffs.assign(n, 0);
    std::vector<elem_t> upk(n);  // u^{p^k}
    std::uint64_t pk = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        upk[k] = F.pow(u, pk);
        pk *= F.p();
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        elem_t acc = 0;
        for (std::uint32_t k = 0; k < n; ++k) {
            elem_t sym = (i == k) ? F.add(d.at(i, i), d.at(i, i))
                                  : d.at(std::min(i, k), std::max(i, k));
            if (sym) acc = F.add(acc, F.mul(upk[k], sym));
        }
        comp.coeffs[i] = acc;
    }
    return comp;
}

DoTheoremReport do_theorem_check(const FnTable& f, elem_t c) {
    check_c(f, c);
    DoForm form = do_decompose(f);
    const auto& F = *f.dom;
    const std::uint32_t p = F.p(), q = F.q();
    const std::uint32_t pn1 = q / p;  // p^{n-1}

    DoTheoremReport rep;
    rep.c = c;
    rep.bent1_direct = is_bent1(f, c, Method::definition).value;
    rep.hyp1_applicable = c != 1;

    const elem_t one_minus_c = F.sub(1, c);

    // per b: |{x : Tr(b(1-c)F(x)) != 0}|, the mass of the nonzero supports
    std::vector<std::uint32_t> nonzero_mass(q, 0);
    if (rep.hyp1_applicable) {
        for (elem_t b = 1; b < q; ++b) {
            elem_t s = F.mul(b, one_minus_c);
            std::uint32_t m = 0;
            for (elem_t x = 0; x < q; ++x)
                if (F.abs_trace(F.mul(s, f.table[x])) != 0) ++m;
            nonzero_mass[b] = m;
        }
    }

    rep.cond2_all = true;
    std::vector<std::int64_t> si_counts(std::size_t(p) * p, 0);  // [i][t]
    for (elem_t u = 1; u < q; ++u) {
        DoCompanion comp = do_companion(form, u);
        for (elem_t b = 1; b < q; ++b) {
            const bool kernel = comp.eval(b) == 0;

            if (rep.hyp1_applicable && !rep.hyp1_fired && kernel && nonzero_mass[b] < pn1) {
                rep.hyp1_fired = true;
                rep.hyp1_witness = wit_ub(u, b);
                rep.hyp1_witness->count = nonzero_mass[b];
            }

            // S_i sums over the supports Omega_{b(1-c)F,i}, plus the plain
            // derivative character sum as a cross-check of the companion
            std::fill(si_counts.begin(), si_counts.end(), 0);
            std::vector<std::int64_t> t0_counts(p, 0);
            const elem_t s = F.mul(b, one_minus_c);
            for (elem_t x = 0; x < q; ++x) {
                std::uint32_t i = F.abs_trace(F.mul(s, f.table[x]));
                std::uint32_t t = F.abs_trace(F.mul(b, F.sub(f.table[F.add(x, u)], f.table[x])));
                ++si_counts[std::size_t(i) * p + t];
                ++t0_counts[t];
            }
            CycInt t0 = CycInt::from_redundant(p, p, t0_counts);
            CycInt t0_expect =
                kernel ? CycInt::root_power(p, p, F.abs_trace(F.mul(b, f.table[u]))).scaled(q)
                       : CycInt::zero(p, p);
            if (t0 != t0_expect)
                throw std::logic_error("linearized character-sum dichotomy failed");

            // correction term sum_{i>=1} (1 - zeta^i) S_i
            CycInt corr = CycInt::zero(p, p);
            for (std::uint32_t i = 1; i < p; ++i) {
                std::vector<std::int64_t> slice(si_counts.begin() + std::ptrdiff_t(i) * p,
                                                si_counts.begin() + std::ptrdiff_t(i + 1) * p);
                CycInt si = CycInt::from_redundant(p, p, slice);
                corr += si - si * CycInt::root_power(p, p, i);
            }
            bool branch_a = !kernel && corr.is_zero();
            bool branch_b = kernel && corr == t0_expect;
            if (branch_a)
                ++rep.cond2_branch_a;
            else if (branch_b)
                ++rep.cond2_branch_b;
            else if (rep.cond2_all) {
                rep.cond2_all = false;
                rep.cond2_first_failure = wit_ub(u, b);
            }
        }
    }

    rep.consistent = (!rep.hyp1_fired || !rep.bent1_direct) && (!rep.cond2_all || rep.bent1_direct);
    return rep;
}

std::vector<std::string> predicate_notes(const FnTable& f, elem_t c, bool second_kind) {
    std::vector<std::string> notes;
    if (c == 1)
        notes.push_back(
            "c = 1: the bent/perfect equivalences assume c != 1; verdicts are definitional");
    if (second_kind) {
        notes.push_back("sigma over " + sigma_basis_string(*f.cod) +
                        "; basis invariance of second-kind verdicts is not established");
        notes.push_back(
            "second-kind correlations use the field-difference exponent; the Walsh-product "
            "pairing (bent2) inverts the Z_{p^m}-difference correlation, and the two can "
            "disagree for m > 1");
    }
    return notes;
}

AnalysisReport analyze(const FnTable& f, elem_t c, Method m) {
    check_c(f, c);
    AnalysisReport r;
    r.c = c;
    DdtTable ddt = c_ddt(f, c);
    r.delta = c_uniformity(ddt);
    r.pcn = r.delta == 1;
    r.apcn = r.delta == 2;
    if (r.delta > 1) {
        for (elem_t a = (c == 1 ? 1 : 0); a < f.q_dom() && !r.delta_witness; ++a)
            for (elem_t b = 0; b < f.q_cod(); ++b)
                if (ddt.at(a, b) == r.delta) {
                    Witness w;
                    w.a = a;
                    w.b = b;
                    w.count = r.delta;
                    r.delta_witness = w;
                    break;
                }
    }
    r.perfect1 = is_perfect1(f, c, false, m);
    r.strict_perfect1 = is_perfect1(f, c, true, m);
    r.bent1 = is_bent1(f, c, m == Method::profile ? Method::automatic : m);
    r.bent1_balance = is_bent1_by_balance(f, c);
    Method m2 = (m == Method::balance) ? Method::automatic : m;
    r.perfect2 = is_perfect2(f, c, false, m2);
    r.strict_perfect2 = is_perfect2(f, c, true, m2);
    r.bent2 = is_bent2(f, c);
    r.notes = predicate_notes(f, c, true);
    return r;
}

}  // namespace cdbent
