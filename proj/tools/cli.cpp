#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "akh/constructions.hpp"
#include "akh/criteria.hpp"
#include "akh/json_io.hpp"
#include "akh/verify.hpp"

namespace {

using namespace akh;

struct Options {
    int m = 2;
    int r = 2;
    std::string spec;   // empty = symbolic domain
    std::string a;      // optional composition filter for constructions
    bool json = false;
    long limit = 0;     // 0 = default per domain
};

long basis_size_capped(int m, int r, long cap) {
    // m^r * r!, saturated just above cap so oversize inputs never overflow
    long n = 1;
    for (int i = 0; i < r; ++i) {
        if (n > cap) return cap + 1;
        n *= m;
    }
    for (int i = 2; i <= r; ++i) {
        if (n > cap) return cap + 1;
        n *= i;
    }
    return n;
}

void enforce_limits(const Options& opt) {
    if (opt.m < 1 || opt.r < 1) throw std::invalid_argument("need m >= 1 and r >= 1");
    long cap = opt.limit > 0 ? opt.limit : (opt.spec.empty() ? 2000 : 5000);
    if (basis_size_capped(opt.m, opt.r, cap) > cap)
        throw std::invalid_argument("basis size m^r * r! exceeds the limit " +
                                    std::to_string(cap) + "; raise it with --limit");
}

CumComposition parse_a(const std::string& text, int m, int r) {
    auto j = nlohmann::json::parse(text);
    CumComposition a(j.get<std::vector<int>>());
    if (a.m() != m || a.r() != r)
        throw std::invalid_argument("--a: composition does not match (m, r)");
    return a;
}

std::string read_operand(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::invalid_argument("cannot read " + arg.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

// ---------------------------------------------------------------- commands

template <class C>
int cmd_basis(const Context<C>& ctx, const Options& opt) {
    const auto& keys = ctx.basis();
    if (opt.json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& k : keys) {
            nlohmann::json rec;
            rec["c"] = k.c;
            rec["w"] = k.w.one_line();
            out.push_back(std::move(rec));
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& k : keys) {
            std::string line = "c=[";
            for (size_t i = 0; i < k.c.size(); ++i)
                line += (i ? "," : "") + std::to_string(k.c[i]);
            line += "] w=" + k.w.str();
            std::cout << line << "\n";
        }
        std::cout << keys.size() << " basis keys\n";
    }
    return 0;
}

template <class C>
int cmd_mul(const Context<C>& ctx, const Options& opt, const std::string& lhs,
            const std::string& rhs) {
    Element<C> x = element_from_json(ctx, nlohmann::json::parse(read_operand(lhs)));
    Element<C> y = element_from_json(ctx, nlohmann::json::parse(read_operand(rhs)));
    Element<C> p = mul(x, y);
    if (opt.json) std::cout << element_to_json(p).dump() << "\n";
    else std::cout << p.str() << "\n";
    return 0;
}

template <class C>
int cmd_nf(const Context<C>& ctx, const Options& opt, const std::vector<std::string>& toks) {
    std::vector<WordToken<C>> word;
    for (const auto& t : toks) {
        if (t.size() >= 2 && (t[0] == 'T' || t[0] == 'L') &&
            t.find_first_not_of("0123456789", 1) == std::string::npos) {
            int i = std::stoi(t.substr(1));
            if (t[0] == 'T') word.push_back(TokenT{i});
            else word.push_back(TokenL{i});
        } else {
            word.push_back(parse_coeff(t, ctx.one()));
        }
    }
    Element<C> x = from_word(ctx, word);
    if (opt.json) std::cout << element_to_json(x).dump() << "\n";
    else std::cout << x.str() << "\n";
    return 0;
}

template <class C>
nlohmann::json construction_record(const Context<C>& ctx, const CumComposition& a) {
    nlohmann::json rec;
    rec["a"] = a.entries();
    rec["w_a"] = w_of(a).one_line();
    rec["pi"] = element_to_json(pi_of(ctx, a));
    rec["pit_prime"] = element_to_json(pit_of(ctx, a.prime()));
    rec["v"] = element_to_json(v_elem(ctx, a));
    auto zs = z_pair(ctx, a);
    rec["z_prime"] = element_to_json(zs.z_prime);
    rec["z"] = element_to_json(zs.z);
    return rec;
}

template <class F>
void add_field_extras(nlohmann::json& rec, const Context<F>& ctx, const CumComposition& a) {
    auto zs = z_pair(ctx, a);
    auto zinv = invert_in_subalgebra(ctx, zs.z, a);
    rec["z_invertible"] = zinv.has_value();
    rec["rank"] = right_ideal(ctx, v_elem(ctx, a)).rank;
    if (zinv) {
        Element<F> e = mul(mul(v_elem(ctx, a), t_elem(ctx, w_of(a.prime()))), *zinv);
        rec["e"] = element_to_json(e);
        rec["idempotent_ok"] = mul(e, e) == e;
    } else {
        rec["idempotent_ok"] = false;
    }
}

template <class C>
int cmd_constructions(const Context<C>& ctx, const Options& opt, bool field_extras) {
    std::vector<CumComposition> as;
    if (!opt.a.empty()) as.push_back(parse_a(opt.a, opt.m, opt.r));
    else as = enumerate_lambda(opt.m, opt.r);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& a : as) {
        nlohmann::json rec = construction_record(ctx, a);
        if constexpr (!std::is_same_v<C, LaurentPoly>) {
            if (field_extras) add_field_extras(rec, ctx, a);
        }
        out.push_back(std::move(rec));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_poincare(const Options& opt) {
    int m = opt.m, r = opt.r;
    nlohmann::json out;
    out["m"] = m;
    out["r"] = r;
    nlohmann::json fi = nlohmann::json::array();
    for (int i = 1; i <= m; ++i) fi.push_back(f_poly(m, r, i).str());
    out["f_i"] = std::move(fi);
    out["f"] = f_poly(m, r).str();
    out["d_sym"] = poincare_sym(r, m).str();
    out["d_w"] = d_w_poly(m, r).str();
    if (!opt.spec.empty()) {
        auto spec = to_rational_spec(parse_spec_string(opt.spec));
        nlohmann::json sv;
        nlohmann::json sfi = nlohmann::json::array();
        for (int i = 1; i <= m; ++i) sfi.push_back(specialize(f_poly(m, r, i), spec).str());
        sv["f_i"] = std::move(sfi);
        sv["f"] = specialize(f_poly(m, r), spec).str();
        sv["d_sym"] = specialize(poincare_sym(r, m), spec).str();
        Rational dw = specialize(d_w_poly(m, r), spec);
        sv["d_w"] = dw.str();
        sv["semisimple"] = dw != 0;
        out["specialized"] = std::move(sv);
    }
    if (opt.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        for (int i = 1; i <= m; ++i)
            std::cout << "f_{" << m << "," << r << "," << i << "} = "
                      << out["f_i"][i - 1].get<std::string>() << "\n";
        std::cout << "f_{" << m << "," << r << "} = " << out["f"].get<std::string>() << "\n";
        std::cout << "d_sym = " << out["d_sym"].get<std::string>() << "\n";
        std::cout << "d_W = " << out["d_w"].get<std::string>() << "\n";
        if (out.contains("specialized")) {
            const auto& sv = out["specialized"];
            std::cout << "at " << opt.spec << ": d_W = " << sv["d_w"].get<std::string>()
                      << " -> " << (sv["semisimple"].get<bool>() ? "semisimple" : "not semisimple")
                      << "\n";
        }
    }
    return 0;
}

int cmd_verify(const Options& opt, const std::string& id) {
    Report rep = run_verify(id, opt.m, opt.r, opt.spec);
    if (opt.json) {
        std::cout << rep.to_json().dump(2) << "\n";
    } else {
        for (const auto& it : rep.items) {
            std::cout << (it.ok ? "ok   " : "FAIL ") << it.name;
            if (!it.ok && !it.detail.empty()) std::cout << " [" << it.detail << "]";
            std::cout << "\n";
        }
        std::cout << rep.id << " (m=" << rep.m << ", r=" << rep.r << "): "
                  << (rep.ok() ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return rep.ok() ? 0 : 1;
}

// dispatch over the coefficient domain selected by --spec
template <class Fn>
int with_context(const Options& opt, Fn&& fn) {
    if (opt.spec.empty()) {
        auto ctx = make_symbolic_context(opt.m, opt.r);
        return fn(*ctx, false);
    }
    SpecString ss = parse_spec_string(opt.spec);
    if (static_cast<int>(ss.u.size()) != opt.m)
        throw std::invalid_argument("--spec: need exactly m values of u");
    if (ss.is_fp) {
        auto ctx = make_specialized_context(opt.m, opt.r, to_fp_spec(ss));
        return fn(*ctx, true);
    }
    auto ctx = make_specialized_context(opt.m, opt.r, to_rational_spec(ss));
    return fn(*ctx, true);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation in the cyclotomic Hecke algebra H_m^r"};
    app.require_subcommand(1);

    Options opt;
    app.fallthrough(); // accept the global flags before or after the subcommand
    app.add_option("-m", opt.m, "number of cyclotomic parameters u_1..u_m");
    app.add_option("-r", opt.r, "number of strands (degree of the symmetric group)");
    app.add_option("--spec", opt.spec,
                   "specialization 'q=<rat>,u=[<rat>,...]' with optional ',field=Fp:<prime>'");
    app.add_flag("--json", opt.json, "emit JSON instead of plain text");
    app.add_option("--limit", opt.limit, "override the basis-size guard");

    auto* sb_basis = app.add_subcommand("basis", "list the normal-form basis in canonical order");
    std::string mul_lhs, mul_rhs;
    auto* sb_mul = app.add_subcommand("mul", "normal-form product of two JSON elements");
    sb_mul->add_option("lhs", mul_lhs, "left operand (JSON, or @file)")->required();
    sb_mul->add_option("rhs", mul_rhs, "right operand (JSON, or @file)")->required();
    std::vector<std::string> nf_word;
    auto* sb_nf = app.add_subcommand("nf", "normal form of a generator word");
    sb_nf->add_option("word", nf_word, "tokens T<i>, L<i>, or scalar factors");
    auto* sb_cons = app.add_subcommand("constructions", "dump w_a, pi_a, v_a, z_a per composition");
    sb_cons->add_option("--a", opt.a, "restrict to one cumulative composition, e.g. [0,1,2]");
    auto* sb_poin = app.add_subcommand("poincare", "factor polynomials and the semisimplicity bound");
    std::string verify_id;
    auto* sb_verify = app.add_subcommand("verify", "run one verification suite");
    std::string ids;
    for (const auto& id : akh::verify_check_ids()) ids += (ids.empty() ? "" : ", ") + id;
    sb_verify->add_option("check", verify_id, "one of: " + ids)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        enforce_limits(opt);
        if (sb_basis->parsed())
            return with_context(opt, [&](auto& ctx, bool) { return cmd_basis(ctx, opt); });
        if (sb_mul->parsed())
            return with_context(opt, [&](auto& ctx, bool) { return cmd_mul(ctx, opt, mul_lhs, mul_rhs); });
        if (sb_nf->parsed())
            return with_context(opt, [&](auto& ctx, bool) { return cmd_nf(ctx, opt, nf_word); });
        if (sb_cons->parsed())
            return with_context(opt, [&](auto& ctx, bool f) { return cmd_constructions(ctx, opt, f); });
        if (sb_poin->parsed()) return cmd_poincare(opt);
        if (sb_verify->parsed()) return cmd_verify(opt, verify_id);
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
