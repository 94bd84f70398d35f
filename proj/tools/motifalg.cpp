#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "motifalg/graph6.hpp"
#include "motifalg/json_io.hpp"
#include "motifalg/oraclesim.hpp"
#include "motifalg/witness.hpp"

namespace ma = motifalg;
using ma::Json;

namespace {

struct GlobalOptions {
    std::string format = "json";
    std::uint64_t seed = 0;
    int cap_n = 0; // 0 = defaults
    int budget = 0;

    ma::Caps caps() const {
        if (cap_n > 0)
            return ma::Caps::uniform(cap_n);
        if (const char* env = std::getenv("MOTIFALG_CAP_N")) {
            int value = std::atoi(env);
            if (value > 0)
                return ma::Caps::uniform(value);
        }
        return ma::default_caps();
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ma::ValidationError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string trim(std::string text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.pop_back();
    std::size_t start = 0;
    while (start < text.size() && (text[start] == ' ' || text[start] == '\t'))
        ++start;
    return text.substr(start);
}

// A graph argument is a shorthand name, a file (graph6 or JSON), or an
// inline graph6 string / JSON object.
std::string graph_payload(const std::string& arg) {
    if (std::filesystem::exists(arg))
        return trim(read_file(arg));
    return arg;
}

ma::Graph resolve_graph(const std::string& arg) {
    if (auto named = ma::named_graph(arg))
        return *named;
    std::string payload = graph_payload(arg);
    if (!payload.empty() && payload.front() == '{')
        return ma::graph_from_json(Json::parse(payload));
    return ma::from_graph6(payload);
}

ma::OrderedGraph resolve_ordered(const std::string& arg) {
    if (auto named = ma::named_graph(arg))
        return ma::OrderedGraph{*named}; // natural order on the shorthand's labels
    std::string payload = graph_payload(arg);
    if (!payload.empty() && payload.front() == '{')
        return ma::ordered_from_json(Json::parse(payload));
    return ma::OrderedGraph{ma::from_graph6(payload)};
}

ma::ColoredGraph resolve_colored(const std::string& arg) {
    std::string payload = graph_payload(arg);
    if (payload.empty() || payload.front() != '{')
        throw ma::ValidationError("colored graphs are given as JSON objects");
    return ma::colored_from_json(Json::parse(payload));
}

ma::RelStructure resolve_relstructure(const std::string& arg) {
    std::string payload = graph_payload(arg);
    return ma::relstructure_from_json(Json::parse(payload));
}

ma::MotifParameter load_param(const std::string& arg, const ma::Caps& caps) {
    std::string payload = graph_payload(arg);
    return ma::motif_from_json(Json::parse(payload), caps);
}

// shorthand name for a pattern if one matches, else graph6 / JSON
Json render_pattern(const ma::ParamKind& kind, const ma::CanonicalKey& key, const ma::Caps& caps) {
    if (kind.kind == ma::Kind::unordered) {
        static const char* names[] = {"K0", "K1", "K2", "triangle", "K4", "K5", "I2", "I3",
                                      "I4", "P3", "P4", "C4", "C5"};
        for (const char* name : names)
            if (auto g = ma::named_graph(name))
                if (ma::canonical_form(*g, caps) == key)
                    return name;
    }
    return ma::pattern_json(kind, key);
}

void emit_table(const Json& j, std::ostream& out, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            std::string path = prefix.empty() ? key : prefix + "." + key;
            if (value.is_object() || value.is_array())
                emit_table(value, out, path);
            else
                out << path << "\t" << value.dump() << "\n";
        }
    } else if (j.is_array()) {
        std::size_t index = 0;
        for (const auto& value : j) {
            std::string path = prefix + "[" + std::to_string(index++) + "]";
            if (value.is_object() || value.is_array())
                emit_table(value, out, path);
            else
                out << path << "\t" << value.dump() << "\n";
        }
    } else {
        out << prefix << "\t" << j.dump() << "\n";
    }
}

void emit(const Json& j, const GlobalOptions& global) {
    if (global.format == "table")
        emit_table(j, std::cout, "");
    else
        std::cout << j.dump(2) << "\n";
}

Json bigint_json(const ma::BigInt& value) {
    if (value.fits_slong_p())
        return value.get_si();
    return value.get_str();
}

Json scan_result_json(const ma::ScanResult& result, const ma::MotifParameter& phi,
                      const ma::Caps& caps) {
    Json out;
    if (result.all_nonnegative) {
        out["verdict"] = "AllNonnegative";
    } else {
        out["verdict"] = "Counterexample";
        out["graph"] = render_pattern(phi.kind, *result.counterexample, caps);
        out["value"] = ma::rational_json(result.value);
    }
    return out;
}

ma::Rational parse_coeff(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return ma::make_rational(std::stoll(text), 1);
    return ma::make_rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

struct Options {
    // count
    std::string count_pattern, count_target, count_mode = "indsub";
    bool count_ordered = false;
    // eval
    std::string eval_param, eval_target;
    // linearize
    std::vector<std::string> lin_product, lin_binomial;
    std::string lin_poly;
    bool lin_ordered = false;
    // classify / symmetrize / scan
    std::string classify_param, symm_param, scan_param;
    int scan_n = 0;
    // witness
    std::string wit_param, wit_against;
    // matrix
    std::vector<std::string> matrix_patterns;
    int matrix_enum = -1;
    // conv
    std::string conv_input, conv_type;
    bool conv_inverse_flag = false;
    // universe
    int g_n = 0, g_k = 0, g_p = 2;
    std::string g_mode = "formula";
    int s_n = 0, s_m = 0, s_r = 0;
    std::string p_file, p_mode = "formula";
    int p_m = 0;
    std::vector<std::string> u_coeffs;
    int u_dim = -1, u_p = 2;
    std::string u_paramset;
    // instantiate
    std::string inst_graph, inst_pattern = "K2", inst_param, inst_traces;
    std::uint64_t inst_nstart = 4;
};

int dispatch(CLI::App& app, const Options& opt, const GlobalOptions& global);

} // namespace

int main(int argc, char** argv) {
    GlobalOptions global;
    Options opt;
    CLI::App app{"exact computations on graph motif parameters"};
    app.require_subcommand(1);
    app.add_option("--format", global.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", global.seed, "seed for randomized constructions");
    app.add_option("--cap-n", global.cap_n, "override all size caps");
    app.add_option("--budget", global.budget, "override the oracle query budget");

    // count
    auto* count = app.add_subcommand("count", "count pattern occurrences in a target");
    count->add_option("--pattern", opt.count_pattern, "pattern graph")->required();
    count->add_option("--target", opt.count_target, "target graph")->required();
    count->add_option("--mode", opt.count_mode, "counting mode")
        ->check(CLI::IsMember({"indsub", "sub", "hom", "embed", "strong_embed", "aut"}));
    count->add_flag("--ordered", opt.count_ordered, "treat both graphs as ordered");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a motif parameter on a target");
    eval_cmd->add_option("--param", opt.eval_param, "parameter JSON")->required();
    eval_cmd->add_option("--target", opt.eval_target, "target object")->required();

    // linearize
    auto* lin = app.add_subcommand("linearize", "linearize products, binomials, or polynomials");
    lin->add_option("--product", opt.lin_product, "pattern list for a product");
    lin->add_option("--binomial", opt.lin_binomial, "pattern and k")->expected(2);
    lin->add_option("--poly", opt.lin_poly, "polynomial JSON file");
    lin->add_flag("--ordered", opt.lin_ordered, "treat patterns as ordered");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "dichotomy verdict for a parameter");
    classify_cmd->add_option("--param", opt.classify_param, "parameter JSON")->required();

    // symmetrize
    auto* symm = app.add_subcommand("symmetrize", "expand an unordered parameter over orderings");
    symm->add_option("--param", opt.symm_param, "parameter JSON")->required();

    // scan-nonneg
    auto* scan = app.add_subcommand("scan-nonneg", "scan all classes up to n for a negative value");
    scan->add_option("--param", opt.scan_param, "parameter JSON")->required();
    scan->add_option("--n-max", opt.scan_n, "largest vertex count")->required();

    // witness
    auto* wit = app.add_subcommand("witness", "find a graph where a good candidate disagrees");
    wit->add_option("--param", opt.wit_param, "bad parameter JSON")->required();
    wit->add_option("--against", opt.wit_against, "candidate good parameter JSON")->required();

    // matrix
    auto* matrix_cmd = app.add_subcommand("matrix", "evaluation matrix over a pattern list");
    matrix_cmd->add_option("--patterns", opt.matrix_patterns, "pattern list");
    matrix_cmd->add_option("--enumerate", opt.matrix_enum, "use all classes up to n vertices");

    // conv
    auto* conv_cmd = app.add_subcommand("conv", "convert mixed ordered structures to set-relational");
    conv_cmd->add_option("--input", opt.conv_input, "structure JSON")->required();
    conv_cmd->add_flag("--inverse", opt.conv_inverse_flag, "apply the inverse translation");
    conv_cmd->add_option("--original-type", opt.conv_type, "mixed type JSON (inverse only)");

    // universe
    auto* universe = app.add_subcommand("universe", "vector-space and parameter-set counts");
    universe->require_subcommand(1);
    auto* gaussian = universe->add_subcommand("gaussian", "k-dim subspaces of F_p^n");
    gaussian->add_option("--n", opt.g_n)->required();
    gaussian->add_option("--k", opt.g_k)->required();
    gaussian->add_option("--p", opt.g_p)->required();
    gaussian->add_option("--mode", opt.g_mode)->check(CLI::IsMember({"formula", "bruteforce"}));
    auto* stirling = universe->add_subcommand("stirling", "r-Stirling numbers of the second kind");
    stirling->add_option("--n", opt.s_n)->required();
    stirling->add_option("--m", opt.s_m)->required();
    stirling->add_option("--r", opt.s_r)->required();
    auto* psub = universe->add_subcommand("param-subsets", "m-parameter subsets of a parameter set");
    psub->add_option("--paramset", opt.p_file, "parameter set JSON")->required();
    psub->add_option("--m", opt.p_m)->required();
    psub->add_option("--mode", opt.p_mode)->check(CLI::IsMember({"formula", "bruteforce"}));
    auto* ueval = universe->add_subcommand("eval", "evaluate a universe motif parameter");
    ueval->add_option("--coeff", opt.u_coeffs, "terms k=num[/den]")->required();
    ueval->add_option("--dim", opt.u_dim, "vector space dimension");
    ueval->add_option("--p", opt.u_p, "field order");
    ueval->add_option("--paramset", opt.u_paramset, "parameter set JSON target");

    // instantiate
    auto* inst = app.add_subcommand("instantiate", "build and verify a set-instantiator");
    inst->add_option("--graph", opt.inst_graph, "ordered root graph")->required();
    inst->add_option("--pattern", opt.inst_pattern, "pattern for the naive strategy");
    inst->add_option("--param", opt.inst_param, "ordered parameter (default: the ordered pattern count)");
    inst->add_option("--n-start", opt.inst_nstart, "initial spreading width");
    inst->add_option("--traces", opt.inst_traces, "write the accepting-trace log to this file ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app, opt, global);
    } catch (const ma::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ma::InternalError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int dispatch(CLI::App& app, const Options& opt, const GlobalOptions& global) {
    ma::Caps caps = global.caps();
    CLI::App* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();

    if (verb == "count") {
        const std::string& mode = opt.count_mode;
        bool ordered = opt.count_ordered;
        const std::string& pattern_arg = opt.count_pattern;
        const std::string& target_arg = opt.count_target;
        long long value = 0;
        if (ordered) {
            ma::OrderedGraph h = resolve_ordered(pattern_arg);
            ma::OrderedGraph g = resolve_ordered(target_arg);
            if (mode == "indsub")
                value = ma::indsub(h, g, caps);
            else if (mode == "sub")
                value = ma::sub(h, g, caps);
            else if (mode == "aut")
                value = ma::aut(h, caps);
            else
                value = ma::count_maps(h, g,
                                       mode == "hom"     ? ma::MapMode::hom
                                       : mode == "embed" ? ma::MapMode::embed
                                                         : ma::MapMode::strong_embed,
                                       caps);
        } else {
            ma::Graph h = resolve_graph(pattern_arg);
            ma::Graph g = resolve_graph(target_arg);
            if (mode == "indsub")
                value = ma::indsub(h, g, caps);
            else if (mode == "sub")
                value = ma::sub(h, g, caps);
            else if (mode == "aut")
                value = ma::aut(h, caps);
            else
                value = ma::count_maps(h, g,
                                       mode == "hom"     ? ma::MapMode::hom
                                       : mode == "embed" ? ma::MapMode::embed
                                                         : ma::MapMode::strong_embed,
                                       caps);
        }
        emit(Json{{mode, value}}, global);
        return 0;
    }

    if (verb == "eval") {
        ma::MotifParameter phi = load_param(opt.eval_param, caps);
        const std::string& target = opt.eval_target;
        ma::Rational value;
        switch (phi.kind.kind) {
        case ma::Kind::unordered: value = ma::evaluate(phi, resolve_graph(target), caps); break;
        case ma::Kind::ordered: value = ma::evaluate(phi, resolve_ordered(target), caps); break;
        case ma::Kind::colored: value = ma::evaluate(phi, resolve_colored(target), caps); break;
        case ma::Kind::relational: value = ma::evaluate(phi, resolve_relstructure(target), caps); break;
        }
        emit(Json{{"value", ma::rational_json(value)}}, global);
        return 0;
    }

    if (verb == "linearize") {
        const auto& product = opt.lin_product;
        const auto& binomial = opt.lin_binomial;
        const std::string& poly = opt.lin_poly;
        bool ordered = opt.lin_ordered;
        ma::MotifParameter result;
        if (!product.empty()) {
            std::vector<ma::CanonicalKey> keys;
            for (const auto& arg : product)
                keys.push_back(ordered ? ma::canonical_form(resolve_ordered(arg), caps)
                                       : ma::canonical_form(resolve_graph(arg), caps));
            result = ma::linearize_product(keys, caps);
        } else if (!binomial.empty()) {
            ma::CanonicalKey key = ordered ? ma::canonical_form(resolve_ordered(binomial[0]), caps)
                                           : ma::canonical_form(resolve_graph(binomial[0]), caps);
            result = ma::linearize_binomial(key, std::stoi(binomial[1]), caps);
        } else if (!poly.empty()) {
            result = ma::linearize_polynomial(
                ma::polynomial_from_json(Json::parse(read_file(poly)), caps), caps);
        } else {
            throw ma::ValidationError("linearize needs --product, --binomial, or --poly");
        }
        emit(ma::motif_json(result), global);
        return 0;
    }

    if (verb == "classify") {
        ma::MotifParameter phi = load_param(opt.classify_param, caps);
        ma::Classification c = ma::classify(phi);
        Json out;
        out["verdict"] = ma::verdict_name(c.verdict);
        out["impure_support"] = c.impure_support;
        if (c.witness) {
            out["pattern"] = render_pattern(phi.kind, c.witness->pattern, caps);
            out["coeff"] = ma::rational_json(c.witness->coefficient);
            out["witness"] = render_pattern(phi.kind, c.witness->witness_graph, caps);
        }
        emit(out, global);
        return 0;
    }

    if (verb == "symmetrize") {
        ma::MotifParameter phi = load_param(opt.symm_param, caps);
        emit(ma::motif_json(ma::symmetrize(phi, caps)), global);
        return 0;
    }

    if (verb == "scan-nonneg") {
        ma::MotifParameter phi = load_param(opt.scan_param, caps);
        int n_max = opt.scan_n;
        emit(scan_result_json(ma::check_nonnegative_upto(phi, n_max, caps), phi, caps), global);
        return 0;
    }

    if (verb == "witness") {
        ma::MotifParameter phi = load_param(opt.wit_param, caps);
        ma::MotifParameter psi = load_param(opt.wit_against, caps);
        Json out;
        if (phi.kind.kind == ma::Kind::ordered) {
            auto result = ma::find_witness(
                phi, [&](const ma::OrderedGraph& g) { return ma::evaluate(psi, g, caps); }, caps);
            if (result) {
                out["witness"] = ma::graph_json(result->witness);
                out["phi"] = ma::rational_json(result->phi_value);
                out["psi"] = ma::rational_json(result->psi_value);
            } else
                out["witness"] = nullptr;
        } else {
            auto result = ma::find_witness(
                phi, [&](const ma::Graph& g) { return ma::evaluate(psi, g, caps); }, caps);
            if (result) {
                out["witness"] = result->witness.n() <= 62 ? Json(ma::to_graph6(result->witness))
                                                           : ma::graph_json(result->witness);
                out["phi"] = ma::rational_json(result->phi_value);
                out["psi"] = ma::rational_json(result->psi_value);
            } else
                out["witness"] = nullptr;
        }
        emit(out, global);
        return 0;
    }

    if (verb == "matrix") {
        const auto& patterns = opt.matrix_patterns;
        int enumerate_n = opt.matrix_enum;
        std::vector<ma::CanonicalKey> keys;
        if (enumerate_n >= 0)
            keys = ma::enumerate_graphs(enumerate_n, ma::EnumKind::unordered(), caps);
        else
            for (const auto& arg : patterns)
                keys.push_back(ma::canonical_form(resolve_graph(arg), caps));
        ma::EvaluationMatrix matrix = ma::evaluation_matrix(keys, caps);
        Json index = Json::array();
        for (const auto& key : matrix.index)
            index.push_back(ma::pattern_json(ma::ParamKind::unordered(), key));
        Json entries = Json::array();
        for (const auto& row : matrix.entries) {
            Json row_json = Json::array();
            for (const auto& value : row)
                row_json.push_back(value.get_num().get_si());
            entries.push_back(row_json);
        }
        emit(Json{{"index", index}, {"entries", entries}}, global);
        return 0;
    }

    if (verb == "conv") {
        ma::RelStructure input = resolve_relstructure(opt.conv_input);
        bool inverse = opt.conv_inverse_flag;
        if (!inverse) {
            emit(ma::relstructure_json(ma::conv(input)), global);
            return 0;
        }
        const std::string& type_arg = opt.conv_type;
        if (type_arg.empty())
            throw ma::ValidationError("--inverse needs --original-type");
        Json type_json = Json::parse(graph_payload(type_arg));
        ma::MixedType original;
        for (const auto& slot : type_json) {
            std::string variant = slot.at("variant").get<std::string>();
            ma::RelVariant v = variant == "set"        ? ma::RelVariant::set
                               : variant == "multiset" ? ma::RelVariant::multiset
                               : variant == "list_norep" ? ma::RelVariant::list_norep
                                                         : ma::RelVariant::list_rep;
            original.slots.push_back({slot.at("arity").get<int>(), v});
        }
        emit(ma::relstructure_json(ma::conv_inverse(input, original)), global);
        return 0;
    }

    if (verb == "universe") {
        CLI::App* usub = sub->get_subcommands().front();
        const std::string uverb = usub->get_name();
        if (uverb == "gaussian") {
            int n = opt.g_n;
            int k = opt.g_k;
            int p = opt.g_p;
            const std::string& mode = opt.g_mode;
            ma::BigInt value = mode == "formula" ? ma::gaussian_binomial(n, k, p)
                                                 : ma::count_subspaces_bruteforce(n, k, p);
            emit(Json{{"count", bigint_json(value)}}, global);
            return 0;
        }
        if (uverb == "stirling") {
            ma::BigInt value = ma::r_stirling(opt.s_n, opt.s_m, opt.s_r);
            emit(Json{{"count", bigint_json(value)}}, global);
            return 0;
        }
        if (uverb == "param-subsets") {
            ma::ParamSet x = ma::paramset_from_json(Json::parse(read_file(opt.p_file)));
            ma::BigInt value = ma::count_param_subsets(
                x, opt.p_m,
                opt.p_mode == "formula" ? ma::CountMode::formula : ma::CountMode::bruteforce);
            emit(Json{{"count", bigint_json(value)}}, global);
            return 0;
        }
        // universe eval
        std::map<int, ma::Rational> coefficients;
        for (const auto& spec : opt.u_coeffs) {
            auto eq = spec.find('=');
            if (eq == std::string::npos)
                throw ma::ValidationError("--coeff entries look like k=num[/den]");
            coefficients[std::stoi(spec.substr(0, eq))] = parse_coeff(spec.substr(eq + 1));
        }
        const std::string& paramset_arg = opt.u_paramset;
        ma::Rational value;
        if (!paramset_arg.empty()) {
            value = ma::evaluate_universe_motif(coefficients,
                                                ma::paramset_from_json(Json::parse(read_file(paramset_arg))));
        } else {
            int dim = opt.u_dim;
            int p = opt.u_p;
            if (dim < 0)
                throw ma::ValidationError("universe eval needs --dim or --paramset");
            ma::VecSpace space;
            space.p = p;
            space.ambient_dim = dim;
            for (int i = 0; i < dim; ++i) {
                std::vector<int> row(dim, 0);
                row[i] = 1;
                space.basis.push_back(row);
            }
            value = ma::evaluate_universe_motif(coefficients, space);
        }
        emit(Json{{"value", ma::rational_json(value)}}, global);
        return 0;
    }

    if (verb == "instantiate") {
        ma::OrderedGraph g = resolve_ordered(opt.inst_graph);
        ma::Graph pattern = resolve_graph(opt.inst_pattern);
        ma::QueryStrategy strategy = ma::naive_indsub_strategy(pattern, caps);
        if (global.budget > 0)
            strategy.query_budget = global.budget;
        const std::string& param_arg = opt.inst_param;
        ma::MotifParameter phi;
        if (param_arg.empty()) {
            ma::MotifParameter unordered_phi(ma::ParamKind::unordered());
            unordered_phi.add(ma::canonical_form(pattern, caps), ma::Rational(1));
            phi = ma::symmetrize(unordered_phi, caps);
        } else {
            phi = load_param(param_arg, caps);
        }
        ma::SetInstantiator si =
            ma::build_set_instantiator(strategy, g, phi, global.seed, opt.inst_nstart, 16, caps);
        ma::VerificationReport report = ma::verify_set_instantiator(si, strategy, g, phi, caps);
        Json counts = Json::object();
        for (const auto& [mask, oracle] : si.inst) {
            ma::AcceptingPaths paths = ma::count_accepting(strategy, oracle);
            std::string subset = "{";
            for (int v = 0; v < g.n(); ++v)
                if (mask >> v & 1)
                    subset += (subset.size() > 1 ? "," : "") + std::to_string(v);
            subset += "}";
            counts[subset] = paths.count;
        }
        Json out{{"j", si.j},
                 {"n", si.spread},
                 {"verified", report.ok},
                 {"violations", report.violations},
                 {"accepting_on_full", Json(si.accepting_traces.size())},
                 {"counts", counts}};
        const std::string& traces_arg = opt.inst_traces;
        if (!traces_arg.empty()) {
            std::ostringstream log;
            for (const auto& trace : si.accepting_traces) {
                std::uint32_t mask = si.perc.at(trace.key());
                std::string subset = "{";
                for (int v = 0; v < g.n(); ++v)
                    if (mask >> v & 1)
                        subset += (subset.size() > 1 ? "," : "") + std::to_string(v);
                subset += "}";
                log << trace.log_line() << " perceived=" << subset << "\n";
            }
            if (traces_arg == "-")
                std::cout << log.str();
            else {
                std::ofstream out_file(traces_arg, std::ios::binary);
                out_file << log.str();
            }
        }
        emit(out, global);
        return 0;
    }

    throw ma::ValidationError("unknown verb");
}

} // namespace
