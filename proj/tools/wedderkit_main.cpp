#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wedderkit/errors.hpp"
#include "wedderkit/json_io.hpp"
#include "wedderkit/verify.hpp"

namespace {

struct JobOptions {
    std::string group;
    std::string field;
    long q = 0;
    std::string out;
    std::string format = "json";
    int max_order = 256;
};

wk::FiniteGroup load_group(const std::string& source, int max_order) {
    std::string text = source;
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
        std::ifstream in(source);
        if (!in) throw wk::InvalidParameters("--group: cannot read " + source);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    wk::Json j = wk::Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw wk::InvalidParameters("--group: expected a readable file path or inline JSON");
    return wk::group_from_json(j, max_order);
}

void emit(const JobOptions& opt, const wk::Json& as_json, const std::string& as_text) {
    std::string payload = opt.format == "text" ? as_text : as_json.dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.out);
    if (!out) throw wk::InvalidParameters("--out: cannot open " + opt.out);
    out << payload;
}

void add_common_options(CLI::App* sub, JobOptions& opt, bool needs_field, bool needs_q) {
    sub->add_option("--group", opt.group, "group description: a JSON file path or inline JSON")
        ->required();
    if (needs_field)
        sub->add_option("--field", opt.field,
                        "coefficient field: Q, Q(zeta_m), or Q(zeta_m)^{t1,t2,...}")
            ->required();
    if (needs_q)
        sub->add_option("--q", opt.q, "prime power order of the coefficient field")->required();
    sub->add_option("--out", opt.out, "write the report to this path instead of stdout");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-order", opt.max_order, "largest accepted group order")
        ->envname("WEDDERKIT_MAX_ORDER");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact simple component data for group algebras of finite groups"};
    app.require_subcommand(1);
    int exit_code = 0;

    JobOptions opt;

    CLI::App* decompose = app.add_subcommand(
        "decompose", "full decomposition with action and twisting tables");
    add_common_options(decompose, opt, true, false);
    decompose->callback([&] {
        wk::FiniteGroup G = load_group(opt.group, opt.max_order);
        wk::AbelianField F = wk::parse_field(opt.field);
        wk::DecompositionReport rep = wk::wedderburn_decomposition(G, F);
        wk::CentralUnitRank rank = wk::central_unit_rank(G, F);
        emit(opt, wk::decomposition_to_json(G, rep, rank),
             wk::decomposition_to_text(G, rep, rank));
    });

    CLI::App* count = app.add_subcommand("count", "number of simple components");
    add_common_options(count, opt, true, false);
    count->callback([&] {
        wk::FiniteGroup G = load_group(opt.group, opt.max_order);
        wk::AbelianField F = wk::parse_field(opt.field);
        emit(opt, wk::count_to_json(G, F, wk::component_count(G, F)),
             wk::count_to_text(G, F, wk::component_count(G, F)));
    });

    CLI::App* minimal = app.add_subcommand(
        "minimal", "whether the component count is the smallest possible");
    add_common_options(minimal, opt, true, false);
    minimal->callback([&] {
        wk::FiniteGroup G = load_group(opt.group, opt.max_order);
        wk::AbelianField F = wk::parse_field(opt.field);
        wk::MinimalityReport rep = wk::minimality_report(G, F);
        emit(opt, wk::minimality_to_json(G, F, rep), wk::minimality_to_text(G, F, rep));
    });

    CLI::App* rank = app.add_subcommand(
        "rank", "rank of the central units of the integral group ring");
    add_common_options(rank, opt, true, false);
    rank->callback([&] {
        wk::FiniteGroup G = load_group(opt.group, opt.max_order);
        wk::AbelianField F = wk::parse_field(opt.field);
        wk::CentralUnitRank r = wk::central_unit_rank(G, F);
        emit(opt, wk::rank_to_json(G, F, r), wk::rank_to_text(G, F, r));
    });

    CLI::App* ffcount = app.add_subcommand(
        "ffcount", "number of simple components over a finite field");
    add_common_options(ffcount, opt, false, true);
    ffcount->callback([&] {
        wk::FiniteGroup G = load_group(opt.group, opt.max_order);
        wk::FiniteFieldReport rep = wk::finite_field_component_count(G, opt.q);
        emit(opt, wk::ffcount_to_json(G, rep), wk::ffcount_to_text(G, rep));
    });

    CLI::App* verify = app.add_subcommand(
        "verify", "run the invariant suite on the built-in corpus");
    verify->add_option("--out", opt.out, "write the report to this path instead of stdout");
    verify->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    verify->callback([&] {
        if (verify->count("--format") == 0) opt.format = "text";
        std::vector<wk::VerifyRow> rows = wk::run_verification_suite();
        emit(opt, wk::verification_to_json(rows), wk::verification_to_text(rows));
        for (const wk::VerifyRow& row : rows)
            if (!row.passed) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const wk::NotStronglyMonomialOrIncomplete& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const std::string& p : e.pairs_found()) std::cerr << "  pair found: " << p << "\n";
        std::cerr << "  residual: " << e.residual() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
