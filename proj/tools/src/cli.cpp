#include "eisprod_cli/cli.hpp"

#include "eisprod/error.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace eisprod::cli {

namespace {

struct Options {
    std::string phi = "1", psi = "1", id, target, out, rep, cusp, gamma, spec;
    long l = 0, d = 1, prec = -1, level = 0, weight = 0;
    std::vector<std::string> S;
};

std::vector<i64> parse_int_list(const std::string& text)
{
    std::vector<i64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            fail(ErrorKind::parse, "expected a comma separated integer list, got '" + text + "'");
        }
    return out;
}

Json prime_list(const std::vector<std::string>& items)
{
    if (items.size() == 1 && items[0] == "all")
        return "all";
    Json s = Json::array();
    for (const auto& item : items)
        for (i64 p : parse_int_list(item))
            s.push_back(p);
    return s;
}

Json error_document(const std::string& kind, const std::string& message)
{
    return Json{{"schema", kSchemaVersion}, {"error", {{"kind", kind}, {"message", message}}}};
}

} // namespace

Invocation parse_command_line(int argc, const char* const* argv, std::ostream& help_out)
{
    CLI::App app{"Exact Eisenstein series products: expansions, representations and cusp data"};
    app.require_subcommand(1);
    Invocation inv;
    Options o;
    std::string cache_dir;
    if (const char* env = std::getenv("EISPROD_CACHE_DIR"))
        cache_dir = env;
    bool no_cache = false;
    app.add_option("--json-indent", inv.json_indent, "Indentation of the JSON output (-1 for compact)");
    app.add_option("--cache-dir", cache_dir, "Directory of the result cache (default $EISPROD_CACHE_DIR)");
    app.add_flag("--no-cache", no_cache, "Ignore the result cache");

    auto* eis = app.add_subcommand("eis", "Expansion of E_l^{phi,psi}|B_d or of an Eisenstein basis element");
    eis->add_option("--phi", o.phi, "First character, \"1\" or \"M:i\"");
    eis->add_option("--psi", o.psi, "Second character, \"1\" or \"M:i\"");
    eis->add_option("--l", o.l, "Weight");
    eis->add_option("--d", o.d, "Lift parameter");
    eis->add_option("--id", o.id, "Eisenstein basis id such as \"E4[1]|B2\" or \"E2-E2|B11\"");
    eis->add_option("--prec", o.prec, "Last exponent")->required();

    auto* basis = app.add_subcommand("product-basis", "Generators of the product space and the Eisenstein spanning set");
    basis->add_option("--level", o.level)->required();
    basis->add_option("--weight", o.weight)->required();

    auto* represent = app.add_subcommand("represent", "Represent a target form by products of Eisenstein series");
    represent->add_option("--level", o.level)->required();
    represent->add_option("--weight", o.weight)->required();
    represent->add_option("--target", o.target, "Target expansion (JSON)")->required();
    represent->add_option("--out", o.out, "Write the representation or certificate here");

    auto* rank = app.add_subcommand("rank", "Rank of the product and Eisenstein span");
    rank->add_option("--level", o.level)->required();
    rank->add_option("--weight", o.weight)->required();
    rank->add_option("--prec", o.prec);

    auto* cusp = app.add_subcommand("cusp-expand", "Expansion of a represented form at a cusp");
    cusp->add_option("--rep", o.rep, "Representation (JSON)")->required();
    cusp->add_option("--level", o.level, "Level of Gamma_0(N) for the cusp width (default: representation level)");
    auto* cusp_opt = cusp->add_option("--cusp", o.cusp, "Cusp a/c or \"infinity\"");
    cusp->add_option("--gamma", o.gamma, "Matrix a,b,c,d in SL_2(Z)")->excludes(cusp_opt);
    cusp->add_option("--prec", o.prec, "Last exponent of q_w");

    auto* al = app.add_subcommand("al-eigenvalue", "Atkin-Lehner eigenvalue of a represented form");
    al->add_option("--level", o.level)->required();
    al->add_option("--S", o.S, "Primes of the Atkin-Lehner operator, or \"all\"")->required();
    al->add_option("--rep", o.rep, "Representation (JSON)")->required();
    al->add_option("--prec", o.prec);

    auto* verify = app.add_subcommand("verify", "Check a representation against a target expansion");
    verify->add_option("--rep", o.rep)->required();
    verify->add_option("--target", o.target)->required();
    verify->add_option("--prec", o.prec);

    auto* job = app.add_subcommand("job", "Run a serialized job specification");
    job->add_option("--spec", o.spec, "Job specification (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        help_out << app.help();
        inv.help_only = true;
        return inv;
    } catch (const CLI::CallForAllHelp&) {
        help_out << app.help("", CLI::AppFormatMode::All);
        inv.help_only = true;
        return inv;
    } catch (const CLI::ParseError& e) {
        fail(ErrorKind::parse, e.what());
    }

    Json p = Json::object();
    auto put_prec = [&] {
        if (o.prec >= 0)
            p["prec"] = o.prec;
    };
    const CLI::App* sub = app.get_subcommands().front();
    inv.job.command = sub->get_name();
    if (sub == eis) {
        if (!o.id.empty()) {
            p["id"] = o.id;
        } else {
            p["phi"] = o.phi;
            p["psi"] = o.psi;
            p["l"] = o.l;
            p["d"] = o.d;
        }
        put_prec();
    } else if (sub == basis) {
        p = {{"level", o.level}, {"weight", o.weight}};
    } else if (sub == represent) {
        p = {{"level", o.level}, {"weight", o.weight}, {"target", o.target}};
        if (!o.out.empty())
            p["out"] = o.out;
    } else if (sub == rank) {
        p = {{"level", o.level}, {"weight", o.weight}};
        put_prec();
    } else if (sub == cusp) {
        p["rep"] = o.rep;
        if (o.level != 0)
            p["level"] = o.level;
        if (!o.gamma.empty()) {
            const auto g = parse_int_list(o.gamma);
            if (g.size() != 4)
                fail(ErrorKind::parse, "--gamma needs four integers");
            p["gamma"] = g;
        } else {
            p["cusp"] = o.cusp.empty() ? std::string("infinity") : o.cusp;
        }
        put_prec();
    } else if (sub == al) {
        p = {{"level", o.level}, {"S", prime_list(o.S)}, {"rep", o.rep}};
        put_prec();
    } else if (sub == verify) {
        p = {{"rep", o.rep}, {"target", o.target}};
        put_prec();
    } else if (sub == job) {
        inv.job = job_from_json(read_json_file(o.spec));
        if (!inv.job.cache_dir && !cache_dir.empty() && !no_cache)
            inv.job.cache_dir = cache_dir;
        if (no_cache)
            inv.job.cache_dir.reset();
        return inv;
    }
    inv.job.params = p;
    if (!cache_dir.empty() && !no_cache)
        inv.job.cache_dir = cache_dir;
    return inv;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    int indent = -1;
    try {
        const Invocation inv = parse_command_line(argc, argv, out);
        if (inv.help_only)
            return 0;
        indent = inv.json_indent;
        out << run_job(inv.job).dump(indent) << '\n';
        return 0;
    } catch (const Error& e) {
        out << error_document(error_kind_name(e.kind()), e.what()).dump(indent) << '\n';
    } catch (const Json::exception& e) {
        out << error_document("parse", e.what()).dump(indent) << '\n';
    } catch (const std::exception& e) {
        out << error_document("internal", e.what()).dump(indent) << '\n';
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

} // namespace eisprod::cli
