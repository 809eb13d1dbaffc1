#include <iostream>

#include "CLI11.hpp"
#include "basefree/io.hpp"
#include "basefree/reparam.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace basefree;

namespace {

constexpr uint64_t kDefaultSeed = 20240917;

json algnum_json(const AlgebraicNumber& a) {
    return json{{"min_poly", a.field()->min_poly_str()}, {"rep", a.str()}};
}

json point_json(const ProjPoint2& p) {
    return json::array({algnum_json(p[0]), algnum_json(p[1]), algnum_json(p[2])});
}

json family_json(const ConjugatePointFamily& fam) {
    return json{{"min_poly", fam.field->min_poly_str()},
                {"point", point_json(fam.point)},
                {"family_size", fam.family_size},
                {"multiplicity", fam.multiplicity}};
}

json base_locus_json(const BaseLocusReport& rep) {
    json fams = json::array();
    for (auto& f : rep.families) fams.push_back(family_json(f));
    return json{{"families", std::move(fams)}, {"total_multiplicity", rep.total_multiplicity}};
}

void print_base_locus(const BaseLocusReport& rep) {
    if (rep.families.empty()) std::cout << "base locus: empty\n";
    for (auto& f : rep.families) {
        std::cout << "point " << f.point.str();
        if (!f.field->is_rationals())
            std::cout << "  [conjugate family of size " << f.family_size << " over "
                      << f.field->min_poly_str() << " = 0]";
        std::cout << "  multiplicity " << f.multiplicity << "\n";
    }
    std::cout << "total multiplicity: " << rep.total_multiplicity << "\n";
}

json map_json(const std::vector<PolyQ>& comps, const std::string& prefix) {
    json out = json::object();
    for (size_t i = 0; i < comps.size(); ++i)
        out[prefix + std::to_string(i + 1)] = comps[i].str();
    return out;
}

void print_map(const std::vector<PolyQ>& comps, const std::string& prefix) {
    for (size_t i = 0; i < comps.size(); ++i)
        std::cout << "  " << prefix << i + 1 << " = " << comps[i].str() << "\n";
}

// affine form of a polynomial parametrization: q_i(t1,t2,1)/q4(t1,t2,1),
// where q4 is a constant multiple of t3^d
std::vector<PolyQ> affine_form(const SurfaceParam& Q) {
    PolyQ denom = Q[3].dehomogenize(2);
    if (!denom.is_constant()) throw structural_error("affine form: q4 is not a power of t3");
    Rational c = denom.constant_term();
    std::vector<PolyQ> out;
    for (size_t i = 0; i < 3; ++i) {
        PolyQ a = Q[i].dehomogenize(2);
        a.scale(Rational(1) / c);
        out.push_back(std::move(a));
    }
    return out;
}

struct Options {
    std::string path;
    uint64_t seed = kDefaultSeed;
    bool as_json = false;
    bool check = false;
    long max_ext_degree = kDefaultMaxExtDegree;
};

void add_common(CLI::App* cmd, Options& opt, bool with_check) {
    cmd->add_option("input", opt.path, "input document (p1..p4 or s1..s3)")->required();
    cmd->add_option("--seed", opt.seed, "seed for random specializations");
    cmd->add_flag("--json", opt.as_json, "machine-readable output");
    cmd->add_option("--max-ext-degree", opt.max_ext_degree, "extension-degree limit");
    if (with_check) cmd->add_flag("--check", opt.check, "verify outputs before reporting");
}

int cmd_base_locus(const Options& opt) {
    InputDoc doc = InputDoc::parse_file(opt.path);
    BaseLocusReport rep =
        doc_is_surface(doc)
            ? surface_base_locus(SurfaceParam(doc.polys("p", 4)), opt.seed, opt.max_ext_degree)
            : planar_base_locus(PlanarMap(doc.polys("s", 3)), opt.seed, opt.max_ext_degree);
    if (opt.as_json)
        std::cout << base_locus_json(rep).dump(2) << "\n";
    else
        print_base_locus(rep);
    return 0;
}

int cmd_transversal(const Options& opt) {
    SurfaceParam P = read_surface_param(opt.path);
    TransversalityReport rep = transversality_test(P, opt.seed, opt.max_ext_degree);
    if (opt.as_json) {
        json pts = json::array();
        for (auto& pp : rep.per_point)
            pts.push_back(json{{"point", point_json(pp.family.point)},
                               {"multiplicity", pp.multiplicity},
                               {"is_perfect_square", pp.is_perfect_square},
                               {"tangent_gcd_trivial", pp.tangent_gcd_trivial}});
        json out{{"base_locus", base_locus_json(rep.base_locus)},
                 {"per_point", std::move(pts)},
                 {"transversal", rep.transversal},
                 {"reason", rep.reason}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_base_locus(rep.base_locus);
        if (rep.transversal)
            std::cout << "transversal\n";
        else
            std::cout << "not transversal: " << rep.reason << "\n";
    }
    return rep.transversal ? 0 : 2;
}

const char* outcome_name(ReparamResult::Outcome o) {
    switch (o) {
        case ReparamResult::Outcome::AlreadyAlmostPolynomial: return "AlreadyAlmostPolynomial";
        case ReparamResult::Outcome::Polynomial: return "Polynomial";
        case ReparamResult::Outcome::NoPolynomialParametrization:
            return "NoPolynomialParametrization";
        case ReparamResult::Outcome::NotApplicable: return "NotApplicable";
    }
    return "?";
}

int cmd_reparam(const Options& opt) {
    SurfaceParam P = read_surface_param(opt.path);
    ReparamResult res = polynomial_reparametrize(P, opt.seed, opt.max_ext_degree);
    if (opt.check && res.parametrization) {
        const SurfaceParam& Q = *res.parametrization;
        if (res.sbar) {
            SurfaceParam QoS = compose_planar(Q, *res.sbar);
            for (size_t i = 0; i < 4; ++i)
                if (!(QoS[i] * P[0] - P[i] * QoS[0]).is_zero_poly())
                    throw structural_error("check failed: Q o sbar is not proportional to P");
        }
        BaseLocusReport bl = surface_base_locus(Q, opt.seed, opt.max_ext_degree);
        if (!bl.families.empty())
            throw structural_error("check failed: output base locus is not empty");
    }
    if (opt.as_json) {
        json out{{"outcome", outcome_name(res.outcome)}, {"reason", res.reason}};
        if (res.parametrization) {
            out["parametrization"] = map_json(res.parametrization->components(), "q");
            out["affine"] = map_json(affine_form(*res.parametrization), "a");
        }
        if (res.sbar) out["sbar"] = map_json(res.sbar->components(), "s");
        if (res.rbar) out["rbar"] = map_json(res.rbar->components(), "r");
        if (res.normalizing_projectivity)
            out["L"] = map_json(res.normalizing_projectivity->components(), "l");
        out["checked"] = opt.check;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "outcome: " << outcome_name(res.outcome) << "\n";
        if (!res.reason.empty()) std::cout << "reason: " << res.reason << "\n";
        if (res.parametrization) {
            std::cout << "projective parametrization:\n";
            print_map(res.parametrization->components(), "q");
            std::cout << "affine parametrization:\n";
            print_map(affine_form(*res.parametrization), "a");
        }
        if (res.sbar) {
            std::cout << "reparametrizing map S:\n";
            print_map(res.sbar->components(), "s");
        }
        if (res.rbar) {
            std::cout << "inverse R:\n";
            print_map(res.rbar->components(), "r");
        }
        if (opt.check) std::cout << "check: passed\n";
    }
    switch (res.outcome) {
        case ReparamResult::Outcome::AlreadyAlmostPolynomial:
        case ReparamResult::Outcome::Polynomial: return 0;
        case ReparamResult::Outcome::NotApplicable: return 2;
        case ReparamResult::Outcome::NoPolynomialParametrization: return 3;
    }
    return 1;
}

int cmd_degree(const Options& opt) {
    InputDoc doc = InputDoc::parse_file(opt.path);
    json out = json::object();
    if (doc_is_surface(doc)) {
        SurfaceParam P(doc.polys("p", 4));
        BaseLocusReport bl = surface_base_locus(P, opt.seed, opt.max_ext_degree);
        long sd = P.degree() * P.degree() - bl.total_multiplicity;
        out["degree"] = P.degree();
        out["base_locus_multiplicity"] = bl.total_multiplicity;
        out["surface_degree"] = sd;
    } else {
        PlanarMap S(doc.polys("s", 3));
        BaseLocusReport bl = planar_base_locus(S, opt.seed, opt.max_ext_degree);
        out["degree"] = S.degree();
        out["base_locus_multiplicity"] = bl.total_multiplicity;
    }
    if (opt.as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        for (auto& [k, v] : out.items()) std::cout << k << ": " << v << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"base locus analysis and polynomial reparametrization of rational surfaces"};
    app.require_subcommand(1);
    Options o1, o2, o3, o4;
    add_common(app.add_subcommand("base-locus", "compute the base locus and multiplicities"), o1,
               false);
    add_common(app.add_subcommand("transversal", "run the transversality test (Algorithm 1)"), o2,
               false);
    add_common(app.add_subcommand("reparam", "polynomial reparametrization (Algorithm 2)"), o3,
               true);
    add_common(app.add_subcommand("degree", "report map and surface degrees"), o4, false);
    CLI11_PARSE(app, argc, argv);
    try {
        if (app.got_subcommand("base-locus")) return cmd_base_locus(o1);
        if (app.got_subcommand("transversal")) return cmd_transversal(o2);
        if (app.got_subcommand("reparam")) return cmd_reparam(o3);
        if (app.got_subcommand("degree")) return cmd_degree(o4);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
