#include "cli.hpp"

#include "cgaverma/quotient.hpp"
#include "cgaverma/shapovalov.hpp"
#include "cgaverma/singular.hpp"
#include "cgaverma/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace cga::cli {

namespace {

using json = nlohmann::ordered_json;

struct bad_rational : std::invalid_argument {
    bad_rational(const std::string& flag, const std::string& text)
        : std::invalid_argument("invalid rational '" + text + "' for --" + flag) {}
};

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    int p = 0;
    int q = 0;
    std::optional<std::string> d, r, theta;
    int pmax = 6;
    int qmax = 3;
    bool generic = false;
    bool generic_d = false;
    bool table = false;
    std::string word;
    std::string monomial;
    std::string format = "json";
    std::string output;
};

std::optional<Rational> parse_flag(const std::string& flag, const std::optional<std::string>& text) {
    if (!text) return std::nullopt;
    try {
        return Rational::parse(*text);
    } catch (const parse_error&) {
        throw bad_rational(flag, *text);
    } catch (const division_by_zero&) {
        throw bad_rational(flag, *text);
    }
}

PartialPoint partial_point(const Options& o) {
    PartialPoint at;
    at.theta = parse_flag("theta", o.theta);
    at.d = parse_flag("d", o.d);
    at.r = parse_flag("r", o.r);
    if (at.theta && at.theta->is_zero()) throw invalid_point("theta must be nonzero");
    return at;
}

// Unset r and theta default to 0 and 1.
Point full_point(const Options& o, const char* command) {
    PartialPoint at = partial_point(o);
    if (!at.d) throw usage_error(std::string(command) + " needs --d (or --generic)");
    Point pt{at.theta.value_or(Rational(1)), *at.d, at.r.value_or(Rational(0))};
    require_nonzero_theta(pt);
    return pt;
}

json point_json(const Point& at) {
    return {{"theta", at.theta.to_string()}, {"d", at.d.to_string()}, {"r", at.r.to_string()}};
}

json partial_json(const PartialPoint& at) {
    json j = json::object();
    auto put = [&](const char* key, const std::optional<Rational>& v) {
        j[key] = v ? json(v->to_string()) : json(nullptr);
    };
    put("theta", at.theta);
    put("d", at.d);
    put("r", at.r);
    return j;
}

json report(const char* command) {
    return {{"schema", 1}, {"command", command}};
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

Monomial parse_monomial(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) throw usage_error("--monomial expects h,k,l,m");
    std::array<unsigned, 4> e{};
    for (std::size_t i = 0; i < 4; ++i) {
        std::size_t used = 0;
        long value = -1;
        try {
            value = std::stol(parts[i], &used);
        } catch (const std::exception&) {
        }
        if (value < 0 || used != parts[i].size()) throw usage_error("--monomial entry '" + parts[i] + "' is not a nonnegative integer");
        e[i] = static_cast<unsigned>(value);
    }
    return {e[0], e[1], e[2], e[3]};
}

UEAWord parse_word(const std::string& text) {
    UEAWord word;
    if (text.empty()) return word;
    for (const auto& part : split(text, ',')) {
        auto g = generator_from_name(part);
        if (!g) throw usage_error("unknown generator '" + part + "'");
        word.push_back(*g);
    }
    return word;
}

// Each command fills the JSON report and, for text mode, a human summary.
struct Result {
    json body;
    std::string text;
    int status = exit_ok;
};

Result cmd_weights(const Options& o) {
    const WeightLabel w{o.p, o.q};
    const auto basis = enumerate_basis(w);
    Result res{report("weights")};
    res.body["weight"] = to_json(w);
    res.body["dimension"] = basis.size();
    json b = json::array();
    std::ostringstream text;
    text << "weight (" << w.p << "," << w.q << "): dimension " << basis.size() << "\n";
    for (const auto& mono : basis) {
        b.push_back(to_json(mono));
        text << "  " << mono.to_string() << "\n";
    }
    res.body["basis"] = b;
    res.text = text.str();
    return res;
}

Result cmd_act(const Options& o) {
    const UEAWord word = parse_word(o.word);
    const Monomial mono = parse_monomial(o.monomial);
    const PartialPoint at = partial_point(o);
    Result res{report("act")};
    json names = json::array();
    for (Generator g : word) names.push_back(std::string(name(g)));
    res.body["word"] = names;
    res.body["monomial"] = to_json(mono);
    std::ostringstream text;
    if (at.empty()) {
        const ModuleElement v = act_word(word, ModuleElement(mono));
        res.body["mode"] = "generic";
        res.body["result"] = to_json(v);
        text << v.to_string() << "\n";
    } else {
        const Point pt = full_point(o, "act");
        const RationalElement v = act_word(word, RationalElement(mono), pt);
        res.body["mode"] = "specialized";
        res.body["point"] = point_json(pt);
        res.body["result"] = to_json(v);
        text << v.to_string() << "\n";
    }
    res.text = text.str();
    return res;
}

Result cmd_singular(const Options& o) {
    const WeightLabel w{o.p, o.q};
    SolveMode mode = SolveMode::generic();
    Result res{report("singular")};
    res.body["weight"] = to_json(w);
    if (o.generic) {
        if (o.d) throw usage_error("--generic and --d are mutually exclusive");
        partial_point(o);
        res.body["mode"] = "generic";
    } else {
        const Point pt = full_point(o, "singular");
        mode = SolveMode::specialized(pt);
        res.body["mode"] = "specialized";
        res.body["point"] = point_json(pt);
    }
    const auto found = solve_singular(w, mode);
    res.body["dimension"] = found.size();
    res.body["space_dimension"] = enumerate_basis(w).size();
    if (!mode.is_generic()) {
        const bool expected = classify_level(w, mode.point->d) == LevelExpectation::one;
        res.body["expected_dimension"] = expected ? 1 : 0;
    }
    json vectors = json::array();
    bool all_match = !found.empty();
    for (const auto& c : found) {
        json v = to_json(c);
        const bool match = matches_closed_form(c, mode);
        v["matches_closed_form"] = match;
        all_match = all_match && match;
        vectors.push_back(v);
    }
    res.body["vectors"] = vectors;
    res.body["matches_closed_form"] = found.empty() ? json(nullptr) : json(all_match);

    std::ostringstream text;
    text << "weight (" << w.p << "," << w.q << "): " << found.size() << " singular vector(s) in a space of dimension "
         << enumerate_basis(w).size() << "\n";
    for (const auto& c : found)
        text << "  " << c.vector().to_string() << (matches_closed_form(c, mode) ? "  [closed form]" : "") << "\n";
    res.text = text.str();
    return res;
}

Result cmd_gram(const Options& o) {
    const WeightLabel w{o.p, o.q};
    if (o.generic_d && o.d) throw usage_error("--generic-d and --d are mutually exclusive");
    const PartialPoint at = partial_point(o);
    const auto basis = enumerate_basis(w);
    const Matrix<Polynomial> g = gram_polynomial(w, at);
    const Polynomial det = determinant(g);

    Result res{report("gram")};
    res.body["weight"] = to_json(w);
    res.body["point"] = partial_json(at);
    json b = json::array();
    for (const auto& mono : basis) b.push_back(to_json(mono));
    res.body["basis"] = b;
    json matrix = json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(Scalar(g(i, j)).to_string());
        matrix.push_back(row);
    }
    res.body["matrix"] = matrix;
    res.body["det"] = det.to_string();

    std::ostringstream text;
    text << "weight (" << w.p << "," << w.q << "), dimension " << basis.size() << "\n";
    for (std::size_t i = 0; i < g.rows(); ++i) {
        text << " ";
        for (std::size_t j = 0; j < g.cols(); ++j) text << " [" << g(i, j).to_string() << "]";
        text << "\n";
    }
    text << "det = " << det.to_string() << "\n";
    if (!at.d && !det.is_zero()) {
        json roots = json::array();
        text << "rational roots in d:";
        for (const auto& root : rational_roots_in_d(det)) {
            roots.push_back(root.to_string());
            text << " " << root.to_string();
        }
        text << "\n";
        res.body["rational_roots_in_d"] = roots;
    } else {
        res.body["rational_roots_in_d"] = nullptr;
    }
    res.text = text.str();
    return res;
}

Result cmd_classify(const Options& o) {
    const Point pt = full_point(o, "classify");
    const ClassificationVerdict verdict = classify(pt.d, pt.r, pt.theta);
    Result res{report("classify")};
    const json verdict_json = to_json(verdict);
    for (const auto& [k, v] : verdict_json.items()) res.body[k] = v;
    res.body["pmax"] = o.pmax;
    res.body["qmax"] = o.qmax;

    std::ostringstream text;
    text << "d=" << pt.d.to_string() << " r=" << pt.r.to_string() << " theta=" << pt.theta.to_string() << ": "
         << name(verdict.branch);
    if (verdict.p0) text << " (p0 = " << *verdict.p0 << ")";
    text << "\n";
    if (!verdict.convention.empty()) text << "  note: " << verdict.convention << "\n";

    json levels = json::array();
    bool ok = true;
    if (verdict.p0) {
        const QuotientCheckReport check = quotient_singular_check(pt, o.pmax, o.qmax);
        ok = check.ok();
        for (const auto& level : check.levels) {
            levels.push_back({{"weight", to_json(level.weight)},
                              {"verma_dimension", level.verma_dimension},
                              {"submodule_dimension", level.submodule_dimension},
                              {"quotient_dimension", level.quotient_dimension},
                              {"nullspace_dimension", level.nullspace_dimension}});
            text << "  (" << level.weight.p << "," << level.weight.q << ") V=" << level.verma_dimension
                 << " I=" << level.submodule_dimension << " quotient=" << level.quotient_dimension
                 << " singular=" << level.nullspace_dimension << "\n";
        }
    } else {
        for (int p = 1; p <= o.pmax; ++p)
            for (int q = -o.qmax; q <= o.qmax; ++q) {
                const WeightLabel w{p, q};
                const std::size_t dim = enumerate_basis(w).size();
                const std::size_t found = solve_singular(w, SolveMode::specialized(pt)).size();
                ok = ok && found == 0;
                levels.push_back({{"weight", to_json(w)}, {"verma_dimension", dim}, {"nullspace_dimension", found}});
                text << "  (" << p << "," << q << ") V=" << dim << " singular=" << found << "\n";
            }
    }
    res.body["levels"] = levels;
    res.body["ok"] = ok;
    if (!ok) res.status = exit_violation;
    res.text = text.str();
    return res;
}

Result cmd_verify(const Options& o) {
    Result res{report("verify-theorems")};
    const json full = verify_theorems(o.pmax, o.qmax, worker_count());
    for (const auto& [k, v] : full.items()) res.body[k] = v;
    const bool ok = res.body["ok"].get<bool>();
    if (!ok) res.status = exit_violation;
    std::ostringstream text;
    for (const char* section : {"structure", "singular_grid", "closed_form", "quotient"}) {
        if (!res.body.contains(section)) continue;
        const json& s = res.body[section];
        bool section_ok = true;
        if (s.is_array())
            for (const auto& item : s) section_ok = section_ok && item["ok"].get<bool>();
        else
            section_ok = s["ok"].get<bool>();
        text << section << ": " << (section_ok ? "ok" : "VIOLATION") << "\n";
    }
    text << (ok ? "all checks passed" : "violations found") << "\n";
    res.text = text.str();
    return res;
}

Result cmd_jacobi(const Options& o) {
    const StructureReport r = check_jacobi();
    Result res{report("jacobi")};
    const json scan = to_json(r);
    for (const auto& [k, v] : scan.items()) res.body[k] = v;
    if (o.table) res.body["table"] = bracket_table_json();
    if (!r.ok()) res.status = exit_violation;
    std::ostringstream text;
    text << r.triples_checked << " triples, " << r.pairs_checked << " pairs: "
         << (r.ok() ? "no violations" : "violations found") << "\n";
    const json table = o.table ? bracket_table_json() : json::object();
    for (const auto& [key, value] : table.items()) text << "  [" << key << "] = " << value.dump() << "\n";
    res.text = text.str();
    return res;
}

Result cmd_closed_form(const Options& o) {
    if (o.p < 1) throw usage_error("closed-form needs --p >= 1");
    const ModuleElement v = closed_form_power(o.p);
    const CoefficientTable table = q0_coefficient_table(o.p);
    const WeightLabel w{o.p, 0};
    bool matches_table = v.size() == table.size();
    std::optional<Scalar> scale;
    for (const auto& [lm, c] : table) {
        auto mono = monomial_at(w, lm.first, lm.second);
        const Scalar got = mono ? v.coefficient(*mono) : Scalar();
        if (!scale) scale = got / c;
        matches_table = matches_table && got == *scale * c;
    }

    Result res{report("closed-form")};
    res.body["p"] = o.p;
    res.body["weight"] = to_json(w);
    res.body["vector"] = to_json(v);
    json t = json::array();
    for (const auto& [lm, c] : table) t.push_back({{"l", lm.first}, {"m", lm.second}, {"coef", c.to_string()}});
    res.body["coefficient_table"] = t;
    res.body["matches_table"] = matches_table;
    std::ostringstream text;
    text << "(2θC - K-F+)^" << o.p << "|hw> = " << v.to_string() << "\n";
    text << "matches coefficient table: " << (matches_table ? "yes" : "no") << "\n";

    const PartialPoint at = partial_point(o);
    if (!at.empty()) {
        Point pt{at.theta.value_or(Rational(1)), at.d.value_or(Rational(o.p - 3, 2)), at.r.value_or(Rational(0))};
        const bool annihilated = is_annihilated(specialize(v, pt), pt);
        res.body["point"] = point_json(pt);
        res.body["annihilated"] = annihilated;
        text << "annihilated at d=" << pt.d.to_string() << ": " << (annihilated ? "yes" : "no") << "\n";
    }
    if (!matches_table) res.status = exit_violation;
    res.text = text.str();
    return res;
}

void add_point_flags(CLI::App* sub, Options& o) {
    sub->add_option("--d", o.d, "highest weight d (rational num/den)");
    sub->add_option("--r", o.r, "highest weight r (rational)");
    sub->add_option("--theta", o.theta, "central charge theta (rational, nonzero)");
}

void add_weight_flags(CLI::App* sub, Options& o, bool required = true) {
    auto* p = sub->add_option("--p", o.p, "level p");
    auto* q = sub->add_option("--q", o.q, "weight q");
    if (required) {
        p->required();
        q->required();
    }
}

// First argument that is neither a global flag nor its value.
std::optional<std::string> command_word(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--format" || a == "--output") {
            ++i;
            continue;
        }
        if (a.rfind("-", 0) == 0) continue;
        return a;
    }
    return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Verma modules over the exotic conformal Galilei algebra", "cga_verma"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", o.output, "write the report to a file instead of stdout");

    auto* weights = app.add_subcommand("weights", "PBW basis of a weight space");
    add_weight_flags(weights, o);

    auto* act_cmd = app.add_subcommand("act", "apply a word of generators to a basis monomial");
    act_cmd->add_option("--word", o.word, "comma-separated generators, rightmost acts first")->required();
    act_cmd->add_option("--monomial", o.monomial, "h,k,l,m")->required();
    add_point_flags(act_cmd, o);

    auto* singular = app.add_subcommand("singular", "singular vectors of a weight space");
    add_weight_flags(singular, o);
    add_point_flags(singular, o);
    singular->add_flag("--generic", o.generic, "keep theta, d, r symbolic");

    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of the contravariant form");
    add_weight_flags(gram_cmd, o);
    add_point_flags(gram_cmd, o);
    gram_cmd->add_flag("--generic-d", o.generic_d, "keep d symbolic and report rational roots in d");

    auto* classify_cmd = app.add_subcommand("classify", "irreducibility classification for (d, r, theta)");
    add_point_flags(classify_cmd, o);
    classify_cmd->add_option("--pmax", o.pmax, "highest level checked");
    classify_cmd->add_option("--qmax", o.qmax, "largest |q| checked");

    auto* verify = app.add_subcommand("verify-theorems", "run the full theorem grid");
    verify->add_option("--pmax", o.pmax, "highest level");
    verify->add_option("--qmax", o.qmax, "largest |q|");

    auto* jacobi = app.add_subcommand("jacobi", "check Jacobi, antisymmetry and omega");
    jacobi->add_flag("--table", o.table, "include the bracket table");

    auto* closed = app.add_subcommand("closed-form", "(2θC - K-F+)^p applied to the highest-weight vector");
    closed->add_option("--p", o.p, "power")->required();
    add_point_flags(closed, o);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (app.get_subcommands().empty()) {
            if (auto word = command_word(args)) {
                err << "error: unknown command '" << *word << "'\n";
                return exit_usage;
            }
            if (dynamic_cast<const CLI::RequiredError*>(&e)) {
                err << "error: no command given\n";
                return exit_usage;
            }
        }
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    Result res;
    try {
        const CLI::App* chosen = app.get_subcommands().front();
        const std::string command = chosen->get_name();
        if (command == "weights") res = cmd_weights(o);
        else if (command == "act") res = cmd_act(o);
        else if (command == "singular") res = cmd_singular(o);
        else if (command == "gram") res = cmd_gram(o);
        else if (command == "classify") res = cmd_classify(o);
        else if (command == "verify-theorems") res = cmd_verify(o);
        else if (command == "jacobi") res = cmd_jacobi(o);
        else res = cmd_closed_form(o);
    } catch (const bad_rational& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_rational;
    } catch (const invalid_point& e) {
        err << "error: invalid point: " << e.what() << "\n";
        return exit_zero_theta;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }

    const std::string rendered = o.format == "text" ? res.text : res.body.dump(2) + "\n";
    if (o.output.empty()) {
        out << rendered;
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << o.output << "' for writing\n";
            return exit_failure;
        }
        file << rendered;
    }
    return res.status;
}

}  // namespace cga::cli
