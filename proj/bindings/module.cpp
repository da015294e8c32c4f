#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdbent/analysis.hpp"
#include "cdbent/corpus.hpp"
#include "cdbent/families.hpp"
#include "cdbent/verify.hpp"

namespace py = pybind11;
using namespace cdbent;

namespace {

struct PyField {
    FieldRef ctx;
};

struct PyFn {
    FnTable fn;
};

struct PyEmbedding {
    SubfieldEmbedding emb;
};

Method method_from(const std::string& m) {
    if (m == "auto" || m.empty()) return Method::automatic;
    if (m == "definition") return Method::definition;
    if (m == "balance") return Method::balance;
    if (m == "profile") return Method::profile;
    throw py::value_error("method must be auto|definition|balance|profile");
}

py::object witness_obj(const std::optional<Witness>& w) {
    if (!w) return py::none();
    py::dict d;
    if (w->u >= 0) d["u"] = w->u;
    if (w->b >= 0) d["b"] = w->b;
    if (w->x >= 0) d["x"] = w->x;
    if (w->a >= 0) d["a"] = w->a;
    if (w->count >= 0) d["count"] = w->count;
    return d;
}

py::dict verdict_obj(const Verdict& v) {
    py::dict d;
    d["verdict"] = v.value;
    d["method"] = method_name(v.method);
    d["witness"] = witness_obj(v.witness);
    return d;
}

py::dict cyc_obj(const CycInt& v) {
    py::list coeffs;
    for (const auto& c : v.coeffs()) coeffs.append(c.convert_to<long long>());
    py::dict d;
    d["root_order"] = v.root_order();
    d["coeffs"] = coeffs;
    d["approx"] = v.approx();
    d["zero"] = v.is_zero();
    return d;
}

py::list ddt_obj(const DdtTable& t) {
    py::list rows;
    for (elem_t a = 0; a < t.dom->q(); ++a) {
        py::list row;
        for (elem_t b = 0; b < t.cod->q(); ++b) row.append(t.at(a, b));
        rows.append(std::move(row));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact c-differential spectra and bentness analysis over small finite fields";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<PyField>(m, "Field")
        .def(py::init([](const std::string& spec) { return PyField{FieldCtx::parse(spec)}; }),
             py::arg("spec"), "build from a spec string like '2^5' or '2^5/1,0,0,1,0,1'")
        .def(py::init([](std::uint32_t p, std::uint32_t n) {
                 return PyField{FieldCtx::with_default_poly(p, n)};
             }),
             py::arg("p"), py::arg("n"))
        .def_property_readonly("p", [](const PyField& f) { return f.ctx->p(); })
        .def_property_readonly("n", [](const PyField& f) { return f.ctx->n(); })
        .def_property_readonly("q", [](const PyField& f) { return f.ctx->q(); })
        .def_property_readonly("spec", [](const PyField& f) { return f.ctx->spec_string(); })
        .def_property_readonly("poly", [](const PyField& f) { return f.ctx->spec().poly; })
        .def_property_readonly("alpha", [](const PyField& f) { return f.ctx->alpha(); })
        .def("add", [](const PyField& f, elem_t x, elem_t y) { return f.ctx->add(x, y); })
        .def("sub", [](const PyField& f, elem_t x, elem_t y) { return f.ctx->sub(x, y); })
        .def("mul", [](const PyField& f, elem_t x, elem_t y) { return f.ctx->mul(x, y); })
        .def("inv", [](const PyField& f, elem_t x) { return f.ctx->inv(x); })
        .def("pow", [](const PyField& f, elem_t x, std::uint64_t e) { return f.ctx->pow(x, e); })
        .def("trace", [](const PyField& f, elem_t x) { return f.ctx->abs_trace(x); })
        .def("log", [](const PyField& f, elem_t x) { return f.ctx->log(x); })
        .def("from_log", [](const PyField& f, std::uint64_t t) { return f.ctx->from_log(t); })
        .def("sigma", [](const PyField& f, elem_t y) { return sigma(*f.ctx, y); })
        .def("element_str", [](const PyField& f, elem_t x) { return f.ctx->elem_string(x); })
        .def("__repr__", [](const PyField& f) { return "Field('" + f.ctx->spec_string() + "')"; });

    py::class_<PyEmbedding>(m, "Embedding")
        .def_property_readonly("image",
                               [](const PyEmbedding& e) {
                                   py::list out;
                                   for (elem_t s = 0; s < e.emb.sub->q(); ++s)
                                       out.append(e.emb.up(s));
                                   return out;
                               })
        .def("up", [](const PyEmbedding& e, elem_t x) { return e.emb.up(x); })
        .def("down", [](const PyEmbedding& e, elem_t y) { return e.emb.down(y); })
        .def("rel_trace", [](const PyEmbedding& e, elem_t x) { return rel_trace(e.emb, x); });

    m.def(
        "embedding",
        [](const PyField& big, const PyField& sub) {
            return PyEmbedding{subfield_embedding(big.ctx, sub.ctx)};
        },
        py::arg("big"), py::arg("sub"));

    py::class_<PyFn>(m, "Fn")
        .def_static(
            "from_expr",
            [](const PyField& dom, const std::string& src, const PyField* cod) {
                PolyExpr e = parse_poly(src, *dom.ctx);
                if (!cod || cod->ctx->same_field(*dom.ctx)) return PyFn{eval_to_table(e, dom.ctx)};
                SubfieldEmbedding emb = subfield_embedding(dom.ctx, cod->ctx);
                return PyFn{eval_to_table(e, dom.ctx, emb)};
            },
            py::arg("dom"), py::arg("src"), py::arg("cod") = nullptr,
            "parse a polynomial expression; a proper-subfield cod applies the relative trace")
        .def_static(
            "from_family",
            [](const PyField& ctx, const std::string& spec) {
                return PyFn{family_from_spec(spec, ctx.ctx)};
            },
            py::arg("field"), py::arg("spec"))
        .def_static(
            "from_values",
            [](const PyField& dom, const PyField& cod, std::vector<elem_t> values) {
                if (dom.ctx->p() != cod.ctx->p())
                    throw py::value_error("dom and cod must share the characteristic");
                if (values.size() != dom.ctx->q()) throw py::value_error("table size != p^n");
                for (elem_t v : values)
                    if (v >= cod.ctx->q()) throw py::value_error("table entry out of codomain");
                return PyFn{FnTable{dom.ctx, cod.ctx, std::move(values)}};
            },
            py::arg("dom"), py::arg("cod"), py::arg("values"))
        .def_static(
            "random",
            [](const PyField& dom, const PyField& cod, std::uint64_t seed) {
                return PyFn{random_fn(dom.ctx, cod.ctx, seed)};
            },
            py::arg("dom"), py::arg("cod"), py::arg("seed"))
        .def_property_readonly("dom", [](const PyFn& f) { return PyField{f.fn.dom}; })
        .def_property_readonly("cod", [](const PyFn& f) { return PyField{f.fn.cod}; })
        .def_property_readonly("values", [](const PyFn& f) { return f.fn.table; })
        .def("__call__", [](const PyFn& f, elem_t x) {
            if (x >= f.fn.q_dom()) throw py::value_error("argument outside the domain");
            return f.fn.table[x];
        })
        .def("is_permutation", [](const PyFn& f) { return is_permutation(f.fn); })
        .def("__repr__", [](const PyFn& f) {
            return "Fn(" + f.fn.dom->spec_string() + " -> " + f.fn.cod->spec_string() + ")";
        });

    m.def("walsh1", [](const PyFn& f, elem_t a, elem_t b) { return cyc_obj(walsh1(f.fn, a, b)); });
    m.def("walsh2", [](const PyFn& f, elem_t a) { return cyc_obj(walsh2(f.fn, a)); });
    m.def("xcorr1", [](const PyFn& f, const PyFn& g, elem_t c, elem_t u, elem_t b) {
        return cyc_obj(xcorr1(f.fn, g.fn, c, u, b));
    });
    m.def("xcorr2", [](const PyFn& f, const PyFn& g, elem_t c, elem_t u) {
        return cyc_obj(xcorr2(f.fn, g.fn, c, u));
    });
    m.def("xcorr2_residue", [](const PyFn& f, const PyFn& g, elem_t c, elem_t u) {
        return cyc_obj(xcorr2_residue(f.fn, g.fn, c, u));
    });
    m.def("verify_lemma1",
          [](const PyFn& f, const PyFn& g, elem_t c) { return verify_lemma1(f.fn, g.fn, c); });
    m.def("verify_lemma2",
          [](const PyFn& f, const PyFn& g, elem_t c) { return verify_lemma2(f.fn, g.fn, c); });

    m.def("ddt", [](const PyFn& f, elem_t c) { return ddt_obj(c_ddt(f.fn, c)); });
    m.def("uniformity", [](const PyFn& f, elem_t c) { return c_uniformity(f.fn, c); });
    m.def("is_pcn", [](const PyFn& f, elem_t c) { return is_pcn(f.fn, c); });
    m.def("is_apcn", [](const PyFn& f, elem_t c) { return is_apcn(f.fn, c); });

    m.def(
        "perfect1",
        [](const PyFn& f, elem_t c, bool strict, const std::string& method) {
            return verdict_obj(is_perfect1(f.fn, c, strict, method_from(method)));
        },
        py::arg("fn"), py::arg("c"), py::arg("strict") = false, py::arg("method") = "auto");
    m.def(
        "bent1",
        [](const PyFn& f, elem_t c, const std::string& method) {
            return verdict_obj(is_bent1(f.fn, c, method_from(method)));
        },
        py::arg("fn"), py::arg("c"), py::arg("method") = "auto");
    m.def("bent1_balance",
          [](const PyFn& f, elem_t c) { return verdict_obj(is_bent1_by_balance(f.fn, c)); });
    m.def(
        "perfect2",
        [](const PyFn& f, elem_t c, bool strict, const std::string& method) {
            return verdict_obj(is_perfect2(f.fn, c, strict, method_from(method)));
        },
        py::arg("fn"), py::arg("c"), py::arg("strict") = false, py::arg("method") = "auto");
    m.def("perfect2_profile",
          [](const PyFn& f, elem_t c) { return verdict_obj(perfect2_by_profile(f.fn, c)); });
    m.def("bent2", [](const PyFn& f, elem_t c) { return verdict_obj(is_bent2(f.fn, c)); });
    m.def("support_profile2", [](const PyFn& f, elem_t c, elem_t u) {
        return support_profile2(f.fn, c, u).counts;
    });

    m.def("zero_c_characterization", [](const PyFn& f) {
        ZeroCReport r = zero_c_characterization(f.fn);
        py::dict d;
        d["bent1_at_zero"] = r.bent1_at_zero;
        d["walsh1_row0_vanishes"] = r.walsh1_row0_vanishes;
        d["permutation"] = r.permutation ? py::cast(*r.permutation) : py::none();
        d["bent2_at_zero"] = r.bent2_at_zero;
        d["walsh2_at_zero_is_zero"] = r.walsh2_at_zero_is_zero;
        d["consistent"] = r.consistent;
        return d;
    });

    m.def("do_decompose", [](const PyFn& f) {
        DoForm d = do_decompose(f.fn);
        const std::uint32_t n = d.ctx->n();
        py::list rows;
        for (std::uint32_t i = 0; i < n; ++i) {
            py::list row;
            for (std::uint32_t j = 0; j < n; ++j) row.append(d.at(i, j));
            rows.append(std::move(row));
        }
        return rows;
    });
    m.def("do_companion", [](const PyFn& f, elem_t u) {
        DoCompanion c = do_companion(do_decompose(f.fn), u);
        py::dict d;
        d["A"] = c.coeffs;
        py::list kernel;
        for (elem_t b = 1; b < c.ctx->q(); ++b)
            if (c.eval(b) == 0) kernel.append(b);
        d["kernel"] = kernel;
        return d;
    });
    m.def("do_theorem_check", [](const PyFn& f, elem_t c) {
        DoTheoremReport r = do_theorem_check(f.fn, c);
        py::dict d;
        d["c"] = r.c;
        d["hyp1_applicable"] = r.hyp1_applicable;
        d["hyp1_fired"] = r.hyp1_fired;
        d["hyp1_witness"] = witness_obj(r.hyp1_witness);
        d["cond2_all"] = r.cond2_all;
        d["cond2_branch_a"] = r.cond2_branch_a;
        d["cond2_branch_b"] = r.cond2_branch_b;
        d["bent1_direct"] = r.bent1_direct;
        d["consistent"] = r.consistent;
        return d;
    });

    m.def(
        "analyze",
        [](const PyFn& f, elem_t c, const std::string& method) {
            AnalysisReport r = analyze(f.fn, c, method_from(method));
            py::dict d;
            d["c"] = r.c;
            d["delta"] = r.delta;
            d["delta_witness"] = witness_obj(r.delta_witness);
            d["pcn"] = r.pcn;
            d["apcn"] = r.apcn;
            d["perfect1"] = verdict_obj(r.perfect1);
            d["strict_perfect1"] = verdict_obj(r.strict_perfect1);
            d["bent1"] = verdict_obj(r.bent1);
            d["bent1_balance"] = verdict_obj(r.bent1_balance);
            d["perfect2"] = verdict_obj(r.perfect2);
            d["strict_perfect2"] = verdict_obj(r.strict_perfect2);
            d["bent2"] = verdict_obj(r.bent2);
            d["notes"] = r.notes;
            return d;
        },
        py::arg("fn"), py::arg("c"), py::arg("method") = "auto");

    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, std::uint32_t count, unsigned workers) {
            SuiteResult r = run_suite(name, seed, count, workers);
            py::dict d;
            d["suite"] = r.suite;
            d["pass"] = r.pass;
            d["cases"] = r.cases;
            d["detail"] = r.detail;
            return d;
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("count") = 50, py::arg("workers") = 0);

    m.attr("__version__") = "0.1.0";
}
