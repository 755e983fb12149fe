#include "xsb/cli.hpp"

#include "xsb/certificate_json.hpp"
#include "xsb/numeric.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace xsb::cli {

namespace {

// Exit 2 for anything the user typed wrong.
struct UsageError : Error {
    using Error::Error;
};

std::vector<Exponent> parse_exponents(const std::vector<std::string>& literals, std::size_t count) {
    if (literals.size() != count) {
        throw UsageError("expected " + std::to_string(count) + " exponent literals, got " +
                         std::to_string(literals.size()));
    }
    std::vector<Exponent> out;
    for (const auto& l : literals) out.push_back(Exponent::parse(l));
    return out;
}

TrilinearExponents sextuple(const std::vector<std::string>& literals) {
    auto e = parse_exponents(literals, 6);
    return TrilinearExponents{{IndexPair{e[0], e[1]}, IndexPair{e[2], e[3]}, IndexPair{e[4], e[5]}}};
}

AngleParams angle_params(const RunConfig& c) {
    return AngleParams(Exponent::parse(c.a), Exponent::parse(c.b), Exponent::parse(c.c));
}

RunResult verify(const RunConfig& c) {
    Ladder ladder = load_ladder(c.input_path);
    Certificate cert = verify_ladder(ladder);
    RunResult r;
    r.json = to_json(cert).dump(2);
    std::ostringstream os;
    os << "ladder " << c.input_path << " (" << cert.ladder_hash << ")\n";
    for (const auto& s : cert.steps) {
        os << (s.verdict ? "  ok   " : "  FAIL ") << s.id << ": " << s.symbol << " in " << s.claim.str() << " by "
           << tactic_name(s.tactic);
        if (s.theta) os << " theta=" << s.theta->str();
        os << "\n";
        if (!s.verdict) os << "       " << s.failure << "\n";
    }
    for (const auto& g : cert.goals) {
        os << (g.reached ? "  ok   " : "  FAIL ") << g.id << ": " << g.symbol << " in " << g.goal.str();
        if (g.witness) os << " via " << *g.witness;
        os << "\n";
    }
    if (cert.halted_at) os << "halted at " << *cert.halted_at << "\n";
    os << "axioms:";
    for (const auto& a : cert.axioms) os << " " << a;
    os << "\n" << cert.steps.size() << " steps, " << cert.goals.size() << " goals, verdict "
       << (cert.verdict ? "VERIFIED" : "REJECTED") << "\n";
    r.text = os.str();
    r.exit = cert.verdict ? exit_code::ok : exit_code::failure;
    return r;
}

void print_verdict(std::ostream& os, const TrilinearExponents& t, const ProductVerdict& v) {
    os << t.str() << ": " << (v.holds ? "holds" : "fails");
    if (v.witness) os << " (" << role_name(*v.witness) << ")";
    os << "\n";
    if (!v.holds) {
        for (std::size_t i = 0; i < v.reports.size(); ++i) {
            os << "    " << role_name(static_cast<RoleAssignment>(i)) << " fails:";
            for (const auto& label : v.reports[i].failing()) os << " " << label;
            os << "\n";
        }
    }
}

RunResult check_product(const RunConfig& c) {
    TrilinearExponents t = sextuple(c.literals);
    ProductVerdict v = check_product_estimate(t);
    RunResult r;
    r.json = to_json(v).dump(2);
    std::ostringstream os;
    print_verdict(os, t, v);
    r.text = os.str();
    r.exit = v.holds ? exit_code::ok : exit_code::failure;
    return r;
}

NullFormEstimate nullform(const RunConfig& c) {
    TrilinearExponents t = sextuple(c.literals);
    return NullFormEstimate{t.pairs[0], t.pairs[1], t.pairs[2]};
}

void print_nullform(std::ostream& os, const NullFormCertificate& cert) {
    os << "angle " << cert.params.str() << "\n";
    for (std::size_t i = 0; i < cert.emitted.size(); ++i) {
        const auto& e = cert.emitted[i];
        os << "  " << "abc"[static_cast<int>(e.term)] << "-term, gain " << e.gain.str() << " to factor " << e.gain_to
           << ": ";
        print_verdict(os, e.exponents, cert.verdicts[i]);
    }
    os << (cert.holds ? "all emitted estimates hold" : "some emitted estimate fails") << "\n";
}

RunResult reduce(const RunConfig& c) {
    NullFormCertificate cert = verify_nullform_estimate(nullform(c), angle_params(c));
    RunResult r;
    r.json = to_json(cert).dump(2);
    std::ostringstream os;
    print_nullform(os, cert);
    r.text = os.str();
    r.exit = cert.holds ? exit_code::ok : exit_code::failure;
    return r;
}

RunResult search(const RunConfig& c) {
    if (c.grid < 1) throw UsageError("--grid must be positive");
    AngleSearchResult res = search_angle_params(nullform(c), c.grid);
    RunResult r;
    r.json = to_json(res).dump(2);
    std::ostringstream os;
    os << "scanned " << res.scanned << " triples over " << res.values.size() << " values\n";
    if (res.certificate) {
        print_nullform(os, *res.certificate);
    } else {
        os << "no angle parameters found\n";
    }
    r.text = os.str();
    r.exit = res.params ? exit_code::ok : exit_code::failure;
    return r;
}

RunResult interpolate_cmd(const RunConfig& c) {
    if (c.literals.size() != 3) throw UsageError("interpolate expects three spaces: A B TARGET");
    Space a = Space::parse(c.literals[0]);
    Space b = Space::parse(c.literals[1]);
    Space target = Space::parse(c.literals[2]);
    auto theta = solve_interpolation(a, b, target);
    Json j;
    j["a"] = to_json(a);
    j["b"] = to_json(b);
    j["target"] = to_json(target);
    j["theta"] = theta ? Json(theta->str()) : Json(nullptr);
    RunResult r;
    r.json = j.dump(2);
    r.text = theta ? "theta = " + theta->str() + "\n" : "no theta in [0,1] reaches the target\n";
    r.exit = theta ? exit_code::ok : exit_code::failure;
    return r;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

RunResult sample_nullform_cmd(const RunConfig& c) {
    auto rep = numeric::sample_nullform(c.samples, c.seed);
    bool ok = rep.max_deviation <= 1e-9 && rep.max_identity_error <= 1e-9 && rep.max_bound_excess <= 1e-9;
    Json j;
    j["command"] = "sample-nullform";
    j["seed"] = c.seed;
    j["samples"] = rep.samples;
    j["max_deviation"] = rep.max_deviation;
    j["max_identity_error"] = rep.max_identity_error;
    j["max_ratio"] = rep.max_ratio;
    j["max_bound_excess"] = rep.max_bound_excess;
    j["ok"] = ok;
    RunResult r;
    r.json = j.dump(2);
    r.text = "samples " + std::to_string(rep.samples) + ", seed " + std::to_string(c.seed) +
             "\nmax | |P P| - sin(theta/2) | = " + fmt(rep.max_deviation) +
             "\nmax | |P beta P| - |P P| | = " + fmt(rep.max_identity_error) +
             "\nmax symbol_bound_ratio = " + fmt(rep.max_ratio) +
             "\nmax |P beta P| - theta/2 = " + fmt(rep.max_bound_excess) + "\n" + (ok ? "ok\n" : "VIOLATION\n");
    r.exit = ok ? exit_code::ok : exit_code::failure;
    return r;
}

double surrogate(const std::string& literal) {
    return Exponent::parse(literal).base().convert_to<double>();
}

RunResult sample_angle_cmd(const RunConfig& c) {
    numeric::AngleWeights w{surrogate(c.a), surrogate(c.b), surrogate(c.c)};
    auto rep = numeric::sample_angle_lemma(c.samples, w, c.constant, c.seed);
    bool ok = rep.max_ratio <= 1;
    Json j;
    j["command"] = "sample-angle";
    j["seed"] = c.seed;
    j["samples"] = rep.samples;
    j["weights"] = {w.a, w.b, w.c};
    j["C"] = c.constant;
    j["max_theta_over_rhs"] = rep.max_theta_over_rhs;
    j["max_ratio"] = rep.max_ratio;
    j["ok"] = ok;
    RunResult r;
    r.json = j.dump(2);
    r.text = "samples " + std::to_string(rep.samples) + ", seed " + std::to_string(c.seed) + ", weights (" +
             fmt(w.a) + ", " + fmt(w.b) + ", " + fmt(w.c) + "), C = " + fmt(c.constant) +
             "\nmax theta/rhs = " + fmt(rep.max_theta_over_rhs) + "\nmax theta/(C rhs) = " + fmt(rep.max_ratio) +
             "\n" + (ok ? "ok\n" : "VIOLATION\n");
    r.exit = ok ? exit_code::ok : exit_code::failure;
    return r;
}

RunResult comparability_cmd(const RunConfig& c) {
    auto rep = numeric::weight_comparability(c.mass, c.samples, c.seed);
    bool ok = rep.violations == 0 && rep.max_oracle_excess <= 0;
    Json j;
    j["command"] = "comparability";
    j["seed"] = c.seed;
    j["samples"] = rep.samples;
    j["m"] = c.mass;
    j["max_ratio"] = rep.max_ratio;
    j["max_oracle_excess"] = rep.max_oracle_excess;
    j["violations"] = rep.violations;
    j["ok"] = ok;
    RunResult r;
    r.json = j.dump(2);
    r.text = "samples " + std::to_string(rep.samples) + ", seed " + std::to_string(c.seed) + ", m = " +
             fmt(c.mass) + "\nmax ratio = " + fmt(rep.max_ratio) + " (bound " + fmt(1 + c.mass) +
             ")\nviolations " + std::to_string(rep.violations) + "\n" + (ok ? "ok\n" : "VIOLATION\n");
    r.exit = ok ? exit_code::ok : exit_code::failure;
    return r;
}

RunResult dispatch(const RunConfig& c) {
    switch (c.command) {
    case Command::verify: return verify(c);
    case Command::check_product: return check_product(c);
    case Command::reduce: return reduce(c);
    case Command::search: return search(c);
    case Command::interpolate: return interpolate_cmd(c);
    case Command::sample_nullform: return sample_nullform_cmd(c);
    case Command::sample_angle: return sample_angle_cmd(c);
    case Command::comparability: return comparability_cmd(c);
    }
    throw Error("unknown command");
}

RunResult error_result(int code, const std::string& message) {
    RunResult r;
    r.exit = code;
    r.text = "error: " + message + "\n";
    Json j;
    j["error"] = message;
    j["exit"] = code;
    r.json = j.dump(2);
    return r;
}

// CLI11 reads "-1/8-1e" as an unknown short option, so such tokens are
// shielded with a leading blank during parsing and unshielded afterwards.
bool looks_negative_literal(std::string_view s) {
    return s.size() >= 2 && s[0] == '-' && (std::isdigit(static_cast<unsigned char>(s[1])) || s[1] == 'e');
}

} // namespace

RunResult run(const RunConfig& config) {
    try {
        return dispatch(config);
    } catch (const ParseError& e) {
        return error_result(exit_code::usage, e.what());
    } catch (const IoError& e) {
        return error_result(exit_code::usage, e.what());
    } catch (const UsageError& e) {
        return error_result(exit_code::usage, e.what());
    } catch (const DomainError& e) {
        return error_result(exit_code::usage, e.what());
    } catch (const Rejected& e) {
        return error_result(exit_code::failure, e.what());
    } catch (const std::exception& e) {
        return error_result(exit_code::internal, e.what());
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Checker for exponent ladders of bilinear X^{s,b} estimates", "xsb-ladder"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string json_path;

    auto add_json = [&](CLI::App* sub) {
        sub->add_option("--json", json_path, "Write the JSON report to this path (- for stdout)");
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.samples, "Sample count")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Random seed");
    };
    auto add_angle = [&](CLI::App* sub) {
        sub->add_option("--a", cfg.a, "Angle exponent a");
        sub->add_option("--b", cfg.b, "Angle exponent b");
        sub->add_option("--c", cfg.c, "Angle exponent c");
    };

    auto* verify_cmd = app.add_subcommand("verify", "Verify a ladder script");
    verify_cmd->add_option("file", cfg.input_path, "Ladder file")->required();
    add_json(verify_cmd);

    auto* check_cmd = app.add_subcommand("check-product", "Check a wave-Sobolev product estimate");
    check_cmd->add_option("exponents", cfg.literals, "s0 b0 s1 b1 s2 b2")->required()->expected(6);
    add_json(check_cmd);

    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a null-form estimate to product estimates");
    reduce_cmd->add_option("exponents", cfg.literals, "s0 b0 s1 b1 s2 b2")->required()->expected(6);
    add_angle(reduce_cmd);
    add_json(reduce_cmd);

    auto* search_cmd = app.add_subcommand("search", "Search angle exponents for a null-form estimate");
    search_cmd->add_option("exponents", cfg.literals, "s0 b0 s1 b1 s2 b2")->required()->expected(6);
    search_cmd->add_option("--grid", cfg.grid, "Grid denominator")->check(CLI::PositiveNumber);
    add_json(search_cmd);

    auto* interp_cmd = app.add_subcommand("interpolate", "Solve for the interpolation parameter");
    interp_cmd->add_option("spaces", cfg.literals, "A B TARGET")->required()->expected(3);
    add_json(interp_cmd);

    auto* nullform_cmd = app.add_subcommand("sample-nullform", "Sample the null-form kernel bound");
    add_sampling(nullform_cmd);
    add_json(nullform_cmd);

    auto* angle_cmd = app.add_subcommand("sample-angle", "Sample the angle estimate");
    add_sampling(angle_cmd);
    add_angle(angle_cmd);
    angle_cmd->add_option("--C", cfg.constant, "Constant C")->check(CLI::PositiveNumber);
    add_json(angle_cmd);

    auto* comp_cmd = app.add_subcommand("comparability", "Sample comparability of wave and Klein-Gordon weights");
    add_sampling(comp_cmd);
    comp_cmd->add_option("--m", cfg.mass, "Mass")->check(CLI::NonNegativeNumber);
    add_json(comp_cmd);

    // Negative exponent literals are positionals, not options.
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    for (auto& a : args) {
        if (looks_negative_literal(a)) a.insert(0, " ");
    }
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    for (auto& l : cfg.literals) {
        if (!l.empty() && l[0] == ' ') l.erase(0, 1);
    }

    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "verify") cfg.command = Command::verify;
    else if (name == "check-product") cfg.command = Command::check_product;
    else if (name == "reduce") cfg.command = Command::reduce;
    else if (name == "search") cfg.command = Command::search;
    else if (name == "interpolate") cfg.command = Command::interpolate;
    else if (name == "sample-nullform") cfg.command = Command::sample_nullform;
    else if (name == "sample-angle") cfg.command = Command::sample_angle;
    else cfg.command = Command::comparability;
    for (auto* s : {&cfg.a, &cfg.b, &cfg.c}) {
        if (!s->empty() && (*s)[0] == ' ') s->erase(0, 1);
    }
    if (!json_path.empty()) cfg.json_path = json_path;

    RunResult r = run(cfg);
    if (r.exit == exit_code::usage || r.exit == exit_code::internal) {
        err << r.text;
    } else {
        out << r.text;
    }
    if (cfg.json_path) {
        if (*cfg.json_path == "-") {
            out << r.json << "\n";
        } else {
            std::ofstream f(*cfg.json_path, std::ios::binary);
            if (!f) {
                err << "error: cannot write " << *cfg.json_path << "\n";
                return exit_code::usage;
            }
            f << r.json << "\n";
        }
    }
    return r.exit;
}

} // namespace xsb::cli
