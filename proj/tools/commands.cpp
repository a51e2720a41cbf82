#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json_out.hpp"
#include "qkig/brion_expansion.hpp"
#include "qkig/curve_neighborhoods.hpp"
#include "qkig/qk_ring.hpp"
#include "qkig/verify.hpp"

namespace qkig::cli {

namespace {

Pair parse_pair(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InvalidIndex("pair '" + s + "' must have the form a,b");
    try {
        std::size_t used_a = 0, used_b = 0;
        const std::string sa = s.substr(0, comma), sb = s.substr(comma + 1);
        const int a = std::stoi(sa, &used_a);
        const int b = std::stoi(sb, &used_b);
        if (used_a != sa.size() || used_b != sb.size()) throw std::invalid_argument("trailing characters");
        return {a, b};
    } catch (const std::logic_error&) {
        throw InvalidIndex("pair '" + s + "' must have the form a,b with integers a and b");
    }
}

Pair valid_pair(int n, const std::string& s) {
    const Pair p = parse_pair(s);
    require_valid(n, p);
    return p;
}

void print_element(std::ostream& out, const RingElement& x, bool json) {
    if (json) {
        out << to_json(x).dump() << "\n";
    } else {
        out << x.to_string() << "\n";
    }
}

std::string set_text(const std::set<int>& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int d : s) {
        os << (first ? "" : ",") << d;
        first = false;
    }
    os << "}";
    return os.str();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv(kSeedEnv)) {
        try {
            return std::stoull(env);
        } catch (const std::logic_error&) {
            throw CLI::ValidationError(std::string(kSeedEnv) + " must be an unsigned integer");
        }
    }
    return 7;
}

struct Options {
    int n = 3;
    std::string pair, u, v;
    bool json = false;
    bool classical = false;
    bool broken = false;
    int deg = 1;
    int p = 1;
    std::string suite = "all";
    int n_max = 8;
    int trials = 500;
    std::uint64_t seed = 0;
    std::string op = "divisor";
    std::string format = "text";
};

int cmd_basis(const Options& o, std::ostream& out) {
    const auto basis = basis_list(o.n);
    if (o.json) {
        Json arr = Json::array();
        for (const Pair& p : basis) {
            arr.push_back(Json{{"pair", to_json(p)},
                               {"dim", dim_schubert(o.n, p)},
                               {"codim", codim_schubert(o.n, p)},
                               {"dual", to_json(dual_pair(o.n, p))}});
        }
        out << Json{{"n", o.n}, {"basis", std::move(arr)}}.dump() << "\n";
        return kOk;
    }
    out << "pair      dim  codim  dual\n";
    for (const Pair& p : basis) {
        out << std::left << std::setw(10) << to_string(p) << std::setw(5) << dim_schubert(o.n, p) << std::setw(7)
            << codim_schubert(o.n, p) << to_string(dual_pair(o.n, p)) << "\n";
    }
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const Pair u = valid_pair(o.n, o.u), v = valid_pair(o.n, o.v);
    const bool rich = richardson_nonempty(o.n, u, v);
    const auto support = q_support_product(o.n, u, v);
    if (o.json) {
        Json degrees = Json::array();
        for (int d = 1; d <= 3; ++d) {
            const Classification c = classify(o.n, u, v, d);
            degrees.push_back(Json{{"d", d},
                                   {"ev_birational", c.ev_birational},
                                   {"broken_two_to_one", c.broken_two_to_one},
                                   {"gamma_equal", c.gamma_equal},
                                   {"dim_moduli", dim_moduli(o.n, u, v, d)}});
        }
        const Classification c = classify(o.n, u, v, 1);
        out << Json{{"n", o.n},
                    {"u", to_json(u)},
                    {"v", to_json(v)},
                    {"c1", c.c1},
                    {"c2", c.c2},
                    {"l1", c.l1},
                    {"deg2_case", c.deg2_case},
                    {"richardson_nonempty", rich},
                    {"richardson_dim", rich ? Json(richardson_dim(o.n, u, v)) : Json(nullptr)},
                    {"q_support", support},
                    {"degrees", std::move(degrees)}}
                   .dump()
            << "\n";
        return kOk;
    }
    const Classification c = classify(o.n, u, v, 1);
    out << "u=" << to_string(u) << " v=" << to_string(v) << " n=" << o.n << "\n";
    out << "C1=" << c.c1 << " C2=" << c.c2 << " L1=" << c.l1 << " deg2_case=" << c.deg2_case << "\n";
    out << "richardson: " << (rich ? "nonempty, dim " + std::to_string(richardson_dim(o.n, u, v)) : "empty") << "\n";
    out << "q-support: " << set_text(support) << "\n";
    for (int d = 1; d <= 3; ++d) {
        const Classification cd = classify(o.n, u, v, d);
        out << "d=" << d << ": ev_birational=" << cd.ev_birational << " broken_2to1=" << cd.broken_two_to_one
            << " dim_moduli=" << dim_moduli(o.n, u, v, d) << "\n";
    }
    return kOk;
}

int cmd_gamma(const Options& o, std::ostream& out) {
    const Pair u = valid_pair(o.n, o.u), v = valid_pair(o.n, o.v);
    if (o.deg < 1) throw InvalidIndex("--deg must be >= 1");
    const Descriptor d = o.broken ? gamma_broken(o.n, u, v, o.deg) : gamma_pair(o.n, u, v, o.deg);
    if (o.json) {
        out << to_json(d).dump() << "\n";
    } else {
        out << to_string(d) << "\n";
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    SuiteOptions so;
    so.n_max = o.n_max;
    so.trials = o.trials;
    so.seed = o.seed;
    const auto reports = run_suite(o.suite, so);
    std::size_t failures = 0;
    for (const Report& r : reports) failures += r.failures.size();
    if (o.json) {
        Json arr = Json::array();
        for (const Report& r : reports) arr.push_back(to_json(r));
        out << arr.dump() << "\n";
    } else {
        for (const Report& r : reports) {
            out << (r.ok() ? "ok   " : "FAIL ") << std::left << std::setw(20) << r.suite << " n=" << std::setw(3)
                << r.n << " checks=" << r.trials << " seed=" << r.seed << "\n";
            for (const std::string& f : r.failures) out << "     " << f << "\n";
        }
        out << (failures == 0 ? "all suites passed" : std::to_string(failures) + " failure(s)") << "\n";
    }
    return failures == 0 ? kOk : kSuiteFailure;
}

int cmd_table(const Options& o, std::ostream& out) {
    const bool json = o.format == "json";
    Json rows = Json::array();
    for (const Pair& p : basis_list(o.n)) {
        const RingElement x = o.op == "divisor" ? quantum_chevalley(o.n, p) : seidel(o.n, p);
        if (json) {
            rows.push_back(Json{{"pair", to_json(p)}, {"product", to_json(x)}});
        } else {
            out << "O_{" << p.a << "," << p.b << "} -> " << x.to_string() << "\n";
        }
    }
    if (json) out << Json{{"n", o.n}, {"op", o.op}, {"rows", std::move(rows)}}.dump() << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the quantum K-theory of IG(2,2n)", "qkig"};
    app.require_subcommand(1);
    Options o;

    auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "ambient parameter, IG(2,2n)")->required(); };
    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "canonical JSON output"); };

    auto* basis = app.add_subcommand("basis", "list basis pairs with dim, codim and dual");
    add_n(basis);
    add_json(basis);

    auto* md = app.add_subcommand("mul-divisor", "multiply by the Schubert divisor O_{2n-2,2n}");
    add_n(md);
    md->add_option("--pair", o.pair, "a,b")->required();
    md->add_flag("--classical", o.classical, "classical K-theory product");
    add_json(md);

    auto* ms = app.add_subcommand("mul-seidel", "multiply by the Seidel class O_{n-1,n}");
    add_n(ms);
    ms->add_option("--pair", o.pair, "a,b")->required();
    add_json(ms);

    auto* ps = app.add_subcommand("product-special", "closed-form C1/C2 product O_u * O^v");
    add_n(ps);
    ps->add_option("--u", o.u, "p1,p2")->required();
    ps->add_option("--v", o.v, "q1,q2")->required();
    add_json(ps);

    auto* cl = app.add_subcommand("classify", "conditions, q-support and moduli dimensions");
    add_n(cl);
    cl->add_option("--u", o.u, "p1,p2")->required();
    cl->add_option("--v", o.v, "q1,q2")->required();
    add_json(cl);

    auto* gm = app.add_subcommand("gamma", "curve neighborhood descriptor");
    add_n(gm);
    gm->add_option("--u", o.u, "p1,p2")->required();
    gm->add_option("--v", o.v, "q1,q2")->required();
    gm->add_option("--deg", o.deg, "curve degree d >= 1")->required();
    gm->add_flag("--broken", o.broken, "chains with a degree-1 tail");
    add_json(gm);

    auto* re = app.add_subcommand("richardson-expand", "K-class of X_{p,2n} cap X^{2n-p,2n}");
    add_n(re);
    re->add_option("--p", o.p, "1 <= p <= 2n-1")->required();
    add_json(re);

    auto* vf = app.add_subcommand("verify", "run invariant suites");
    vf->add_option("--suite", o.suite, "suite name")
        ->check(CLI::IsMember({"chevalley", "seidel", "signs", "interval", "brion", "geometry", "bruhat", "all"}));
    vf->add_option("--n-max", o.n_max, "largest n")->check(CLI::Range(2, 64));
    vf->add_option("--trials", o.trials, "trials per membership check")->check(CLI::PositiveNumber);
    auto* seed_opt = vf->add_option("--seed", o.seed, std::string("RNG seed (default from ") + kSeedEnv + ", else 7)");
    add_json(vf);

    auto* tb = app.add_subcommand("table", "full operator table");
    add_n(tb);
    tb->add_option("--op", o.op, "divisor or seidel")->check(CLI::IsMember({"divisor", "seidel"}));
    tb->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (vf->parsed() && seed_opt->count() == 0) o.seed = default_seed();
        if (!vf->parsed()) require_ambient(o.n);

        if (basis->parsed()) return cmd_basis(o, out);
        if (md->parsed()) {
            const Pair p = valid_pair(o.n, o.pair);
            print_element(out, o.classical ? classical_chevalley(o.n, p) : quantum_chevalley(o.n, p), o.json);
            return kOk;
        }
        if (ms->parsed()) {
            print_element(out, seidel(o.n, valid_pair(o.n, o.pair)), o.json);
            return kOk;
        }
        if (ps->parsed()) {
            print_element(out, product_special(o.n, valid_pair(o.n, o.u), valid_pair(o.n, o.v)), o.json);
            return kOk;
        }
        if (cl->parsed()) return cmd_classify(o, out);
        if (gm->parsed()) return cmd_gamma(o, out);
        if (re->parsed()) {
            if (o.p < 1 || o.p > 2 * o.n - 1) {
                throw InvalidIndex("--p must satisfy 1 <= p <= 2n-1 (p=" + std::to_string(o.p) + ")");
            }
            print_element(out, richardson_special_expand(o.n, o.p), o.json);
            return kOk;
        }
        if (vf->parsed()) return cmd_verify(o, out);
        if (tb->parsed()) return cmd_table(o, out);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const InvalidIndex& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidIndex;
    } catch (const UnsupportedFamily& e) {
        err << "error: unsupported family: " << e.what() << "\n";
        return kUnsupportedFamily;
    }
    return kOk;
}

}  // namespace qkig::cli
