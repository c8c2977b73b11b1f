#include "quasisym/cli.hpp"

#include "quasisym/classify.hpp"
#include "quasisym/error.hpp"
#include "quasisym/io.hpp"
#include "quasisym/marginal.hpp"
#include "quasisym/symspace.hpp"
#include "quasisym/value.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace quasisym {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

std::string braces(Mask m) { return "{" + coalition_label(m) + "}"; }

std::string join_sizes(const std::vector<std::size_t>& sizes) {
    std::string out;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(sizes[k]);
    }
    return out;
}

std::vector<Rational> parse_coefficient_list(const std::string& text) {
    std::vector<Rational> coeffs;
    if (text.empty()) return coeffs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        coeffs.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return coeffs;
}

// Writes the checker verdicts; returns true when everything passed.
bool report_checks(std::ostream& out, const ValueMatrix& m, const PermGroup& group, const std::string& prefix) {
    const auto qv = check_quasivalue(m);
    out << prefix << "null-player: " << (qv.null_player_ok ? "ok" : "FAIL") << '\n';
    out << prefix << "efficiency: " << (qv.efficiency_ok ? "ok" : "FAIL") << '\n';
    for (const auto& v : qv.violations) {
        if (v.kind == QuasiValueViolation::Kind::NullPlayer)
            out << prefix << "  nonzero entry for player " << v.player + 1 << " outside " << braces(v.coalition) << '\n';
        else
            out << prefix << "  column " << braces(v.coalition) << " sums to " << to_string(m.column_sum(v.coalition))
                << '\n';
    }
    const auto sym = check_symmetry(m, group);
    out << prefix << "symmetry: ";
    if (sym.ok) {
        out << "ok\n";
    } else {
        const auto& w = *sym.witness;
        out << "FAIL at g=" << w.g.to_cycles() << ", i=" << w.player + 1 << ", R=" << braces(w.coalition) << '\n';
    }
    return qv.ok() && sym.ok;
}

void print_exotic(std::ostream& out) {
    const auto report = exotic_embedding();
    out << "label\tsylow generator\n";
    for (int k = 0; k < 6; ++k)
        out << roman_label(k) << '\t' << report.sylow_generators[static_cast<std::size_t>(k)].to_cycles() << '\n';
    out << "transposition\timage (P -> gPg^-1)\timage (P -> g^-1Pg)\n";
    for (std::size_t k = 0; k < report.transposition_images.size(); ++k)
        out << report.transposition_images[k].first.to_cycles() << '\t'
            << roman_cycles(report.transposition_images[k].second) << '\t'
            << roman_cycles(report.transposition_images_alt[k].second) << '\n';
    out << "image order: " << report.image_group.order() << '\n';
    out << "supertransitive: " << (is_supertransitive(report.image_group).ok ? "yes" : "no") << '\n';
    out << "dimension: " << dimension_orbit(report.image_group) << '\n';
}

int cmd_shapley(int n, const std::string& game_path, std::ostream& out) {
    if (game_path.empty()) {
        if (n < 1 || n > kMaxGamePlayers)
            throw ParseError("--n must lie in 1.." + std::to_string(kMaxGamePlayers));
        out << format_matrix(shapley(n));
        return kExitOk;
    }
    const Game v = parse_game(read_file(game_path));
    if (n != v.players())
        throw ParseError("--n " + std::to_string(n) + " does not match the game's n=" + std::to_string(v.players()));
    out << format_allocation(apply(shapley(n), v));
    return kExitOk;
}

int cmd_dim(const std::string& group_path, std::ostream& out) {
    const PermGroup group = parse_group(read_file(group_path));
    const OrbitStructure s = orbit_structure(group);
    const std::size_t by_orbits = dimension_orbit(s);
    const std::size_t by_cycle_index = dimension_cycle_index(group);
    out << "group: " << group.describe() << '\n';
    out << "cycle index: " << cycle_index(group).to_string() << '\n';
    out << "|X/G| = " << s.num_x_orbits() << '\n';
    out << "|chi/G| = " << s.num_chi_orbits() << '\n';
    out << "dimension (orbit formula) = " << by_orbits << '\n';
    out << "dimension (cycle index) = " << by_cycle_index << '\n';
    out << "representative\torbit size\tk\tblock sizes\n";
    for (const auto& m : s.chi_orbits)
        out << braces(m.representative) << '\t' << m.members.size() << '\t' << m.k() << '\t'
            << join_sizes(m.block_sizes()) << '\n';
    return by_orbits == by_cycle_index ? kExitOk : kExitCheckFailed;
}

int cmd_param(const std::string& group_path, const std::string& coeffs, bool have_coeffs, std::ostream& out) {
    const PermGroup group = parse_group(read_file(group_path));
    const Parametrization p = parametrize(group);
    out << "# dimension " << p.dimension() << '\n';
    if (have_coeffs) {
        const auto c = parse_coefficient_list(coeffs);
        if (c.size() != p.dimension())
            throw ParseError("--coeffs has " + std::to_string(c.size()) + " entries, dimension is " +
                             std::to_string(p.dimension()));
        out << "# coefficients " << coeffs << '\n';
        out << format_matrix(p.point(c));
        return kExitOk;
    }
    for (std::size_t j = 0; j < p.directions.size(); ++j) {
        out << "# direction " << j + 1 << ':';
        for (const auto& e : p.directions[j].entries)
            out << " a[" << e.player + 1 << ';' << coalition_label(e.coalition) << "]=" << to_string(e.value);
        out << '\n';
    }
    out << "# base point: Shapley\n";
    out << format_matrix(p.base);
    return kExitOk;
}

int cmd_check(const std::string& matrix_path, const std::string& group_path, std::ostream& out) {
    const ValueMatrix m = parse_matrix(read_file(matrix_path));
    const PermGroup group = group_path.empty() ? trivial_group(m.players()) : parse_group(read_file(group_path));
    if (group.degree() != m.players())
        throw ParseError("group acts on " + std::to_string(group.degree()) + " points, matrix has " +
                         std::to_string(m.players()) + " players");
    return report_checks(out, m, group, "") ? kExitOk : kExitCheckFailed;
}

int cmd_classify(const std::string& group_path, int verify_n, bool exotic, std::ostream& out) {
    if (exotic) {
        print_exotic(out);
        return kExitOk;
    }
    if (verify_n > 0) {
        const auto report = verify_classification(verify_n);
        out << "classification n=" << verify_n << (report.exhaustive ? " (exhaustive)" : " (targeted)") << '\n';
        for (const auto& line : report.lines) out << line << '\n';
        for (const auto& f : report.failures) out << "FAIL: " << f << '\n';
        out << "result: " << (report.ok ? "ok" : "FAIL") << '\n';
        return report.ok ? kExitOk : kExitCheckFailed;
    }
    const PermGroup group = parse_group(read_file(group_path));
    const auto st = is_supertransitive(group);
    out << "group: " << group.describe() << '\n';
    out << "supertransitive: ";
    if (st.ok) {
        out << "yes\n";
    } else {
        const auto& w = *st.witness;
        out << "no (stabilizer of " << braces(w.coalition) << " does not map " << w.from + 1 << " to " << w.to + 1
            << ")\n";
    }
    out << "set-transitive: " << (is_set_transitive(group) ? "yes" : "no") << '\n';
    out << "lcm filter: " << (lcm_filter(group) ? "pass" : "fail") << " (lcm(1.." << group.degree()
        << ") = " << lcm_upto(group.degree()).get_str() << ", |G| = " << group.order() << ")\n";
    out << "dimension: " << dimension_orbit(group) << '\n';
    return kExitOk;
}

int cmd_marginal_avg(const std::string& group_path, bool uniform, const std::string& coset_path,
                     const std::string& family, const std::string& alpha, std::ostream& out) {
    const PermGroup group = parse_group(read_file(group_path));
    const int n = group.degree();
    if (n > kMaxDistributionPlayers)
        throw ParseError("marginal-avg supports at most " + std::to_string(kMaxDistributionPlayers) + " players");
    const int modes = int(uniform) + int(!coset_path.empty()) + int(!family.empty());
    if (modes != 1) throw ParseError("give exactly one of --uniform, --coset-weights, --family");

    std::string label;
    MarginalDistribution d = MarginalDistribution::uniform(n);
    if (uniform) {
        label = "uniform";
    } else if (!coset_path.empty()) {
        const auto weights = parse_coset_weights(read_file(coset_path), n);
        d = coset_constant(group, weights);
        label = "coset-constant, " + std::to_string(weights.size()) + " representatives";
    } else {
        if (alpha.empty()) throw ParseError("--family needs --alpha");
        const Coalition omega0(n, parse_members(family, n));
        const Rational a = parse_rational(alpha);
        d = shapley_family(omega0, a);
        label = "family omega0=" + braces(omega0.mask()) + " alpha=" + to_string(a);
    }
    const ValueMatrix m = average(d);
    out << "# distribution: " << label << '\n';
    const bool ok = report_checks(out, m, group, "# ");
    out << "# equals Shapley: " << (m == shapley(n) ? "yes" : "no") << '\n';
    out << format_matrix(m);
    return ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations on G-symmetric quasi-values of cooperative games", "quasisym"};
    app.require_subcommand(1);

    int shapley_n = 0;
    std::string game_path, group_path, matrix_path, coeffs, coset_path, family, alpha;
    int verify_n = 0;
    bool exotic_flag = false, uniform = false;

    auto* shapley_cmd = app.add_subcommand("shapley", "Shapley matrix, or the Shapley allocation of a game");
    shapley_cmd->add_option("--n", shapley_n, "number of players")->required();
    shapley_cmd->add_option("--game", game_path, "game file");

    auto* dim_cmd = app.add_subcommand("dim", "dimension of the G-symmetric quasi-values by both formulas");
    dim_cmd->add_option("--group", group_path, "group file")->required();

    auto* param_cmd = app.add_subcommand("param", "affine parametrization, or one sampled matrix");
    param_cmd->add_option("--group", group_path, "group file")->required();
    auto* coeffs_opt = param_cmd->add_option("--coeffs", coeffs, "comma-separated rational coefficients");

    auto* check_cmd = app.add_subcommand("check", "quasi-value and symmetry checks on a matrix file");
    check_cmd->add_option("--matrix", matrix_path, "matrix file")->required();
    check_cmd->add_option("--group", group_path, "group file (default: trivial group)");

    auto* classify_cmd = app.add_subcommand("classify", "supertransitivity tests and classification checks");
    auto* cg = classify_cmd->add_option("--group", group_path, "group file");
    auto* cv = classify_cmd->add_option("--verify", verify_n, "verify the classification for n (1..6)");
    auto* ce = classify_cmd->add_flag("--exotic", exotic_flag, "print the exotic S5 -> S6 embedding");
    cg->excludes(cv)->excludes(ce);
    cv->excludes(ce);
    classify_cmd->require_option(1);

    auto* avg_cmd = app.add_subcommand("marginal-avg", "average marginal operators under a distribution");
    avg_cmd->add_option("--group", group_path, "group file")->required();
    avg_cmd->add_flag("--uniform", uniform, "uniform distribution on S_n");
    avg_cmd->add_option("--coset-weights", coset_path, "coset representative weights file");
    avg_cmd->add_option("--family", family, "omega0 as a comma-separated member list");
    avg_cmd->add_option("--alpha", alpha, "family parameter p/q in (0, 2)");

    auto* exotic_cmd = app.add_subcommand("exotic", "print the exotic S5 -> S6 embedding");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "quasisym: " << e.what() << '\n';
        return kExitBadInput;
    }

    try {
        if (shapley_cmd->parsed()) return cmd_shapley(shapley_n, game_path, out);
        if (dim_cmd->parsed()) return cmd_dim(group_path, out);
        if (param_cmd->parsed()) return cmd_param(group_path, coeffs, coeffs_opt->count() > 0, out);
        if (check_cmd->parsed()) return cmd_check(matrix_path, group_path, out);
        if (classify_cmd->parsed()) return cmd_classify(group_path, verify_n, exotic_flag, out);
        if (avg_cmd->parsed()) return cmd_marginal_avg(group_path, uniform, coset_path, family, alpha, out);
        if (exotic_cmd->parsed()) {
            print_exotic(out);
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "quasisym: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const InvalidArgument& e) {
        err << "quasisym: " << e.what() << '\n';
        return kExitBadInput;
    }
    err << "quasisym: no subcommand\n";
    return kExitBadInput;
}

} // namespace quasisym
