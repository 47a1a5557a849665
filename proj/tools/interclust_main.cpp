// interclust: fit blockmodels to interaction arrays, search partitions,
// project/threshold networks, run temporal fits, simulate and ingest data.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "interclust/blockmodel.hpp"
#include "interclust/errors.hpp"
#include "interclust/karate.hpp"
#include "interclust/network.hpp"
#include "interclust/rollcall.hpp"
#include "interclust/search.hpp"
#include "interclust/simulate.hpp"
#include "interclust/temporal.hpp"

using json = nlohmann::ordered_json;
using namespace interclust;
namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

struct SearchFlags {
    int max_blocks = 2;
    double alpha_tilde = 1.0;
    int restarts = 20;
    int global_steps = 200;
    int local_moves = 50;
    std::uint64_t seed = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("-k,--max-blocks", max_blocks, "maximum number of blocks");
        cmd->add_option("--alpha-tilde", alpha_tilde, "proposal intensity of the search chains");
        cmd->add_option("--restarts", restarts, "independent search restarts");
        cmd->add_option("--global-steps", global_steps, "global (cut-and-paste) moves per restart");
        cmd->add_option("--local-moves", local_moves, "local (cocktail) moves per global move");
        cmd->add_option("--seed", seed, "random seed");
    }

    SearchConfig to_config() const {
        SearchConfig cfg;
        cfg.max_blocks = max_blocks;
        cfg.alpha_tilde = alpha_tilde;
        cfg.restarts = restarts;
        cfg.total_global_steps = global_steps;
        cfg.local_moves_per_global = local_moves;
        cfg.seed = seed;
        return cfg;
    }

    std::string describe(const std::string& command) const {
        std::ostringstream s;
        s << command << " k=" << max_blocks << " alpha_tilde=" << alpha_tilde << " restarts=" << restarts
          << " global_steps=" << global_steps << " local_moves=" << local_moves << " seed=" << seed;
        return s.str();
    }
};

InteractionArray load_array(const std::string& input) {
    if (input == "karate") return karate_counts();
    return InteractionArray::read_csv_file(input);
}

Partition parse_partition_arg(const std::string& arg, int n) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw io_error("cannot open partition file: " + arg.substr(1));
        std::getline(in, text);
    }
    Partition p = Partition::parse(text);
    if (p.size() != n)
        throw data_error("partition covers " + std::to_string(p.size()) + " entities, expected " +
                         std::to_string(n));
    return p;
}

void echo_config(const std::string& resolved, std::uint64_t hash) {
    std::cout << "config: " << resolved << "\n";
    std::cout << "config_hash: " << hex64(hash) << "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write " + path);
    out << content;
}

void emit_json(const json& doc, const std::string& output) {
    std::string text = doc.dump(2);
    text += '\n';
    if (output.empty() || output == "-")
        std::cout << text;
    else
        write_text_file(output, text);
}

void write_trace(const std::string& path, const SearchResult& res, const std::string& stamp) {
    std::ostringstream out;
    out << "# " << stamp << "\nstep,score\n";
    for (auto& [step, score] : res.trace) {
        out.precision(17);
        out << step << ',' << score << '\n';
    }
    write_text_file(path, out.str());
}

json fit_result_json(const std::string& command, const InteractionArray& a, const SearchResult& res,
                     const std::string& resolved, std::uint64_t hash, std::uint64_t seed) {
    json doc;
    doc["command"] = command;
    doc["seed"] = seed;
    doc["config_hash"] = hex64(hash);
    doc["config"] = resolved;
    doc["log_lik"] = res.best_score;
    doc["partition"] = res.best_partition.to_string();
    json blocks = json::object();
    for (int i = 0; i < a.size(); ++i) blocks[a.ids()[i]] = res.best_partition.block_of(i);
    doc["blocks"] = blocks;
    json co = json::array();
    for (const auto& p : res.co_optima) co.push_back(p.to_string());
    doc["co_optima"] = co;
    doc["restart_scores"] = res.restart_scores;
    return doc;
}

// ------------------------------------------------------------------ commands

int cmd_fit(const std::string& family, const std::string& input, const SearchFlags& flags,
            const std::string& output, const std::string& trace_path, bool text) {
    auto a = load_array(input);
    if (family == "poisson" && a.kind() != ArrayKind::Count)
        throw data_error("fit-poisson needs a count array; " + input + " is trials-agreements");
    if (family == "binomial" && a.kind() != ArrayKind::TrialsAgreements)
        throw data_error("fit-binomial needs a trials-agreements array; " + input + " is counts");

    SearchConfig cfg = flags.to_config();
    cfg.record_trace = !trace_path.empty();
    std::string resolved = flags.describe("fit-" + family) + " input=" + input;
    std::uint64_t hash = fnv1a64(resolved);
    echo_config(resolved, hash);

    auto res = maximize(a.size(), make_profiled_objective(a), cfg);
    json doc = fit_result_json("fit-" + family, a, res, resolved, hash, flags.seed);

    if (family == "poisson") {
        auto mle = poisson_mle(a, res.best_partition);
        doc["lambda_in"] = mle.lambda_in ? json(*mle.lambda_in) : json();
        doc["lambda_out"] = mle.lambda_out ? json(*mle.lambda_out) : json();
    } else {
        auto mle = binomial_mle(a, res.best_partition);
        doc["p_in"] = mle.p_in ? json(*mle.p_in) : json();
        doc["p_out"] = mle.p_out ? json(*mle.p_out) : json();
    }

    if (text) {
        std::cout << "best partition: " << res.best_partition.to_string() << "\n";
        std::cout << "log-likelihood: " << res.best_score << "\n";
        if (doc.contains("lambda_in"))
            std::cout << "lambda: (" << doc["lambda_in"].dump() << ", " << doc["lambda_out"].dump() << ")\n";
        else
            std::cout << "p: (" << doc["p_in"].dump() << ", " << doc["p_out"].dump() << ")\n";
        std::cout << "blocks:";
        auto blocks = res.best_partition.blocks();
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            std::cout << "\n  [" << b << "]";
            for (int i : blocks[b]) std::cout << ' ' << a.ids()[i];
        }
        std::cout << "\n";
    }
    if (!trace_path.empty()) write_trace(trace_path, res, resolved + " config_hash=" + hex64(hash));
    emit_json(doc, output);
    return 0;
}

TemporalSeries load_series_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open series manifest: " + path);
    fs::path base = fs::path(path).parent_path();
    TemporalSeries series;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#' || line.rfind("term,", 0) == 0) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw data_error("manifest rows must be 'term,path'");
        std::string term = line.substr(0, comma);
        fs::path file = base / line.substr(comma + 1);
        Term t{term, InteractionArray::read_csv_file(file.string())};
        series.terms.push_back(std::move(t));
    }
    if (series.terms.empty()) throw data_error("series manifest is empty");
    return series;
}

int cmd_fit_temporal(const std::string& manifest, const std::string& scdb, double alpha,
                     const SearchFlags& flags, bool polish, const std::string& output,
                     const std::string& json_output, bool text) {
    TemporalSeries series;
    if (!scdb.empty())
        series = scdb_series(read_scdb_csv_file(scdb));
    else
        series = load_series_manifest(manifest);

    std::string resolved = flags.describe("fit-temporal") + " alpha=" + std::to_string(alpha) +
                           " polish=" + (polish ? "1" : "0") +
                           " input=" + (scdb.empty() ? manifest : scdb);
    std::uint64_t hash = fnv1a64(resolved);
    echo_config(resolved, hash);

    auto seq = fit_sequence(series, {alpha, flags.max_blocks}, polish, flags.to_config());

    std::vector<std::string> comments{resolved + " config_hash=" + hex64(hash)};
    if (!output.empty()) {
        std::ostringstream csv;
        seq.write_csv(csv, comments);
        write_text_file(output, csv.str());
    }
    if (!json_output.empty()) {
        json doc;
        doc["command"] = "fit-temporal";
        doc["seed"] = flags.seed;
        doc["config_hash"] = hex64(hash);
        doc["config"] = resolved;
        doc["joint_score"] = seq.joint_score;
        json terms = json::array();
        for (const auto& t : seq.terms) {
            json jt;
            jt["term"] = t.id;
            jt["partition"] = t.partition.to_string();
            jt["roster"] = t.roster;
            jt["p_in"] = t.params.p_in ? json(*t.params.p_in) : json();
            jt["p_out"] = t.params.p_out ? json(*t.params.p_out) : json();
            jt["score"] = t.score;
            terms.push_back(jt);
        }
        doc["terms"] = terms;
        emit_json(doc, json_output);
    }
    if (text || (output.empty() && json_output.empty())) std::cout << seq.format_table();
    return 0;
}

int cmd_sweep(const std::string& input, const std::string& reference, std::vector<double> percentiles,
              const SearchFlags& flags, const std::string& output, const std::string& series_manifest,
              const std::string& series_refs, const std::string& ranges_output) {
    SearchConfig cfg = flags.to_config();
    std::string resolved = flags.describe("sweep-modularity") + " input=" +
                           (input.empty() ? series_manifest : input);
    std::uint64_t hash = fnv1a64(resolved);
    echo_config(resolved, hash);
    if (percentiles.empty())
        for (int p = 20; p <= 70; p += 5) percentiles.push_back(p);
    std::vector<std::string> comments{resolved + " config_hash=" + hex64(hash)};

    if (!input.empty()) {
        auto a = load_array(input);
        Partition ref = parse_partition_arg(reference, a.size());
        auto rep = percentile_sweep(a, percentiles, ref, cfg);
        std::ostringstream csv;
        rep.write_csv(csv, comments);
        if (output.empty() || output == "-")
            std::cout << csv.str();
        else
            write_text_file(output, csv.str());
    }

    if (!series_manifest.empty()) {
        if (series_refs.empty()) throw config_error("--series needs --series-references (term,partition csv)");
        auto series = load_series_manifest(series_manifest);
        std::map<std::string, std::string> refs;
        std::ifstream in(series_refs);
        if (!in) throw io_error("cannot open " + series_refs);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (line.empty() || line[0] == '#' || line.rfind("term,", 0) == 0) continue;
            auto comma = line.find(',');
            refs[line.substr(0, comma)] = line.substr(comma + 1);
        }

        std::ostringstream csv;
        for (const auto& c : comments) csv << "# " << c << '\n';
        csv << "term,low,high,median\n";
        for (std::size_t t = 0; t < series.terms.size(); ++t) {
            const auto& term = series.terms[t];
            auto it = refs.find(term.id);
            if (it == refs.end()) throw data_error("no reference partition for term " + term.id);
            Partition ref = parse_partition_arg(it->second, term.array.size());
            SearchConfig tcfg = cfg;
            tcfg.seed = Rng(cfg.seed).substream(9, t).seed();
            auto rep = percentile_sweep(term.array, percentiles, ref, tcfg);
            std::vector<double> clean;
            for (const auto& row : rep.rows)
                if (row.misclassified == 0 && row.nonclassified == 0) clean.push_back(row.percentile);
            csv << term.id << ',';
            if (!clean.empty()) {
                double median = clean[clean.size() / 2];
                if (clean.size() % 2 == 0) median = (clean[clean.size() / 2 - 1] + clean[clean.size() / 2]) / 2;
                csv << clean.front() << ',' << clean.back() << ',' << median;
            } else {
                csv << ",,";
            }
            csv << '\n';
        }
        if (ranges_output.empty() || ranges_output == "-")
            std::cout << csv.str();
        else
            write_text_file(ranges_output, csv.str());
    }
    return 0;
}

int cmd_project(const std::string& input, const std::string& kind_name, double cutoff,
                const std::string& output, std::uint64_t seed) {
    auto a = load_array(input);
    ThresholdKind kind = kind_name == "raw-count" ? ThresholdKind::RawCount : ThresholdKind::AgreementRatio;
    std::string resolved = "project input=" + input + " kind=" + kind_name +
                           " cutoff=" + std::to_string(cutoff) + " seed=" + std::to_string(seed);
    std::uint64_t hash = fnv1a64(resolved);
    echo_config(resolved, hash);

    auto net = project(a, kind, cutoff);
    std::ostringstream out;
    out << "# " << resolved << " config_hash=" << hex64(hash) << '\n';
    out << "source,target,threshold_value\n";
    out.precision(17);
    for (int i = 0; i < net.n; ++i)
        for (int j = i + 1; j < net.n; ++j)
            if (net.edge(i, j))
                out << a.ids()[i] << ',' << a.ids()[j] << ',' << threshold_value(a, kind, i, j) << '\n';
    if (output.empty() || output == "-")
        std::cout << out.str();
    else
        write_text_file(output, out.str());
    std::cout << "edges: " << net.edge_count() << ", isolated: " << net.isolated().size() << "\n";
    return 0;
}

int cmd_simulate(const std::string& model, int n, std::string split_text, double lambda_in,
                 double lambda_out, double p_in, double p_out, long trials, int terms, int change_term,
                 int change_entity, std::uint64_t seed, const std::string& output,
                 const std::string& outdir) {
    if (split_text.empty()) {
        std::string s;
        for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(i < (n + 1) / 2 ? 0 : 1);
        split_text = s;
    }
    Partition planted = parse_partition_arg(split_text, n);
    std::ostringstream rs;
    rs << "simulate model=" << model << " n=" << n << " split=" << planted.to_string();
    if (model == "poisson") rs << " lambda_in=" << lambda_in << " lambda_out=" << lambda_out;
    else rs << " trials=" << trials << " p_in=" << p_in << " p_out=" << p_out;
    if (model == "temporal") rs << " terms=" << terms << " change_term=" << change_term
                                << " change_entity=" << change_entity;
    rs << " seed=" << seed;
    std::string resolved = rs.str();
    std::uint64_t hash = fnv1a64(resolved);
    echo_config(resolved, hash);
    std::vector<std::string> comments{resolved + " config_hash=" + hex64(hash)};

    Rng rng(seed);
    if (model == "poisson") {
        simulate_poisson(planted, lambda_in, lambda_out, rng).write_csv_file(output, comments);
    } else if (model == "binomial") {
        simulate_binomial(planted, trials, p_in, p_out, rng).write_csv_file(output, comments);
    } else if (model == "temporal") {
        if (outdir.empty()) throw config_error("simulate --model temporal needs --outdir");
        if (change_entity < 0 || change_entity >= n) throw config_error("--change-entity out of range");
        auto moved = planted.labels();
        moved[change_entity] = moved[change_entity] == 0 ? 1 : 0;
        Partition after(moved);
        std::vector<Partition> seq;
        for (int t = 0; t < terms; ++t) seq.push_back(t < change_term ? planted : after);
        auto series = simulate_temporal(seq, trials, p_in, p_out, rng);

        fs::create_directories(outdir);
        std::ostringstream manifest;
        manifest << "# " << resolved << " config_hash=" << hex64(hash) << "\nterm,path\n";
        for (const auto& term : series.terms) {
            std::string file = "term_" + term.id + ".csv";
            term.array.write_csv_file((fs::path(outdir) / file).string(), comments);
            manifest << term.id << ',' << file << '\n';
        }
        write_text_file((fs::path(outdir) / "manifest.csv").string(), manifest.str());
    } else {
        throw config_error("unknown simulate model '" + model + "'");
    }
    return 0;
}

int cmd_ingest(const std::string& format, const std::string& input, std::optional<int> congress,
               const std::string& output, const std::string& outdir) {
    std::string resolved = "ingest format=" + format + " input=" + input +
                           (congress ? " congress=" + std::to_string(*congress) : "");
    std::uint64_t hash = fnv1a64(resolved);
    echo_config(resolved, hash);
    std::vector<std::string> comments{resolved + " config_hash=" + hex64(hash)};

    if (format == "karate") {
        karate_counts().write_csv_file(output, comments);
        return 0;
    }
    if (format == "matrix") {
        pair_counts(read_rollcall_matrix_csv_file(input)).write_csv_file(output, comments);
        return 0;
    }
    if (format == "voteview") {
        pair_counts(read_voteview_csv_file(input, congress)).write_csv_file(output, comments);
        return 0;
    }
    if (format == "scdb") {
        if (outdir.empty()) throw config_error("ingest --format scdb needs --outdir");
        auto series = scdb_series(read_scdb_csv_file(input));
        fs::create_directories(outdir);
        std::ostringstream manifest;
        manifest << "# " << resolved << " config_hash=" << hex64(hash) << "\nterm,path\n";
        for (const auto& term : series.terms) {
            std::string file = "term_" + term.id + ".csv";
            term.array.write_csv_file((fs::path(outdir) / file).string(), comments);
            manifest << term.id << ',' << file << '\n';
        }
        write_text_file((fs::path(outdir) / "manifest.csv").string(), manifest.str());
        return 0;
    }
    throw config_error("unknown ingest format '" + format + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community detection on interaction-count data"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file");

    // fit-poisson / fit-binomial
    struct {
        std::string input, output, trace;
        bool text = false;
        SearchFlags flags;
    } fitp, fitb;
    auto* sp = app.add_subcommand("fit-poisson", "fit the two-parameter Poisson blockmodel to a count array");
    sp->add_option("--input", fitp.input, "array csv, or 'karate' for the bundled dataset")->required();
    sp->add_option("--output", fitp.output, "result json path ('-' for stdout)");
    sp->add_option("--trace", fitp.trace, "write a step,score csv for the best restart");
    sp->add_flag("--text", fitp.text, "also print a human-readable summary");
    fitp.flags.attach(sp);

    auto* sb = app.add_subcommand("fit-binomial",
                                  "fit the two-parameter Binomial blockmodel to a trials-agreements array");
    sb->add_option("--input", fitb.input, "array csv")->required();
    sb->add_option("--output", fitb.output, "result json path ('-' for stdout)");
    sb->add_option("--trace", fitb.trace, "write a step,score csv for the best restart");
    sb->add_flag("--text", fitb.text, "also print a human-readable summary");
    fitb.flags.attach(sb);

    // fit-temporal
    struct {
        std::string manifest, scdb, output, json_output;
        double alpha = 1.0;
        bool text = false;
        bool no_polish = false;
        SearchFlags flags;
    } ft;
    auto* st = app.add_subcommand("fit-temporal", "sequential posterior-mode clustering over a term series");
    auto* st_manifest = st->add_option("--input", ft.manifest, "series manifest csv (term,path rows)");
    auto* st_scdb = st->add_option("--scdb", ft.scdb, "raw SCDB justice-centered csv (ingested on the fly)");
    st->add_option("--alpha", ft.alpha, "prior chain intensity alpha");
    st->add_option("--output", ft.output, "term-by-entity table csv");
    st->add_option("--json", ft.json_output, "per-term json summary path ('-' for stdout)");
    st->add_flag("--text", ft.text, "print the aligned text table");
    st->add_flag("--no-polish", ft.no_polish, "skip the joint-score polish pass");
    ft.flags.attach(st);
    st_manifest->excludes(st_scdb);

    // sweep-modularity
    struct {
        std::string input, reference, output, series, series_refs, ranges_output, percentiles;
        SearchFlags flags;
    } sw;
    auto* ss = app.add_subcommand("sweep-modularity",
                                  "classification quality of thresholded modularity across percentile cutoffs");
    ss->add_option("--input", sw.input, "trials-agreements array csv");
    ss->add_option("--reference", sw.reference, "reference partition ('0,0,1,...' or @file)");
    ss->add_option("--percentiles", sw.percentiles, "comma-separated percentiles (default 20..70 by 5)");
    ss->add_option("--output", sw.output, "sweep csv path ('-' for stdout)");
    ss->add_option("--series", sw.series, "series manifest for per-term clean-cutoff ranges");
    ss->add_option("--series-references", sw.series_refs, "term,partition csv for the series");
    ss->add_option("--ranges-output", sw.ranges_output, "ranges csv path ('-' for stdout)");
    sw.flags.attach(ss);

    // project
    struct {
        std::string input, kind = "raw-count", output;
        double cutoff = 0;
        std::uint64_t seed = 0;
    } pj;
    auto* spj = app.add_subcommand("project", "threshold an interaction array to a binary edge list");
    spj->add_option("--input", pj.input, "array csv, or 'karate'")->required();
    spj->add_option("--kind", pj.kind, "raw-count or agreement-ratio")
        ->check(CLI::IsMember({"raw-count", "agreement-ratio"}));
    spj->add_option("--cutoff", pj.cutoff, "threshold c; edge iff t(A_ij) > c");
    spj->add_option("--output", pj.output, "edge list csv path ('-' for stdout)");
    spj->add_option("--seed", pj.seed, "seed recorded in the artifact header");

    // simulate
    struct {
        std::string model = "poisson", split, output, outdir;
        int n = 30, terms = 10, change_term = 5, change_entity = 0;
        double lambda_in = 2.0, lambda_out = 0.1, p_in = 0.9, p_out = 0.4;
        long trials = 80;
        std::uint64_t seed = 0;
    } sim;
    auto* ssim = app.add_subcommand("simulate", "draw synthetic arrays from a planted blockmodel");
    ssim->add_option("--model", sim.model, "poisson, binomial or temporal")
        ->check(CLI::IsMember({"poisson", "binomial", "temporal"}));
    ssim->add_option("--n", sim.n, "number of entities");
    ssim->add_option("--split", sim.split, "planted partition (default: two equal blocks)");
    ssim->add_option("--lambda-in", sim.lambda_in, "within-block Poisson intensity");
    ssim->add_option("--lambda-out", sim.lambda_out, "between-block Poisson intensity");
    ssim->add_option("--p-in", sim.p_in, "within-block agreement probability");
    ssim->add_option("--p-out", sim.p_out, "between-block agreement probability");
    ssim->add_option("--trials", sim.trials, "trials per pair (binomial/temporal)");
    ssim->add_option("--terms", sim.terms, "number of terms (temporal)");
    ssim->add_option("--change-term", sim.change_term, "term at which one entity switches blocks");
    ssim->add_option("--change-entity", sim.change_entity, "entity that switches blocks");
    ssim->add_option("--seed", sim.seed, "random seed");
    ssim->add_option("--output", sim.output, "array csv path (poisson/binomial)");
    ssim->add_option("--outdir", sim.outdir, "output directory (temporal: per-term csvs + manifest)");

    // ingest
    struct {
        std::string format, input, output, outdir;
        int congress = 0;
    } ing;
    auto* sing = app.add_subcommand("ingest", "convert raw voting records to interaction arrays");
    sing->add_option("--format", ing.format, "matrix, voteview, scdb or karate")
        ->required()
        ->check(CLI::IsMember({"matrix", "voteview", "scdb", "karate"}));
    sing->add_option("--input", ing.input, "raw csv path");
    sing->add_option("--congress", ing.congress, "voteview congress filter (e.g. 107)");
    sing->add_option("--output", ing.output, "array csv path");
    sing->add_option("--outdir", ing.outdir, "output directory for scdb per-term arrays");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sp->parsed()) return cmd_fit("poisson", fitp.input, fitp.flags, fitp.output, fitp.trace, fitp.text);
        if (sb->parsed()) return cmd_fit("binomial", fitb.input, fitb.flags, fitb.output, fitb.trace, fitb.text);
        if (st->parsed()) {
            if (ft.manifest.empty() && ft.scdb.empty())
                throw config_error("fit-temporal needs --input or --scdb");
            return cmd_fit_temporal(ft.manifest, ft.scdb, ft.alpha, ft.flags, !ft.no_polish, ft.output,
                                    ft.json_output, ft.text);
        }
        if (ss->parsed()) {
            if (sw.input.empty() && sw.series.empty())
                throw config_error("sweep-modularity needs --input or --series");
            if (!sw.input.empty() && sw.reference.empty())
                throw config_error("sweep-modularity --input needs --reference");
            std::vector<double> ps;
            if (!sw.percentiles.empty()) {
                std::stringstream s(sw.percentiles);
                std::string tok;
                while (std::getline(s, tok, ',')) ps.push_back(std::stod(tok));
            }
            return cmd_sweep(sw.input, sw.reference, ps, sw.flags, sw.output, sw.series, sw.series_refs,
                             sw.ranges_output);
        }
        if (spj->parsed()) return cmd_project(pj.input, pj.kind, pj.cutoff, pj.output, pj.seed);
        if (ssim->parsed()) {
            if (sim.model != "temporal" && sim.output.empty())
                throw config_error("simulate needs --output for the array csv");
            return cmd_simulate(sim.model, sim.n, sim.split, sim.lambda_in, sim.lambda_out, sim.p_in,
                                sim.p_out, sim.trials, sim.terms, sim.change_term, sim.change_entity,
                                sim.seed, sim.output, sim.outdir);
        }
        if (sing->parsed()) {
            if (ing.format != "scdb" && ing.output.empty()) throw config_error("ingest needs --output");
            if ((ing.format == "matrix" || ing.format == "voteview" || ing.format == "scdb") &&
                ing.input.empty())
                throw config_error("ingest --format " + ing.format + " needs --input");
            std::optional<int> congress;
            if (ing.congress > 0) congress = ing.congress;
            return cmd_ingest(ing.format, ing.input, congress, ing.output, ing.outdir);
        }
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const data_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
