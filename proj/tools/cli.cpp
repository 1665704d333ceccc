#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <system_error>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "keyfactor/keyfactor.hpp"

namespace keyfactor::cli {

namespace {

namespace fs = std::filesystem;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Diagnostics were already printed.
struct ValidationFailed {};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(fmt::format("{}: cannot open for reading", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError(fmt::format("{}: read failed", path));
    return buf.str();
}

/// Writes via a sibling temporary and rename so readers never see a partial file.
void write_file_atomic(const fs::path &path, const std::string &content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
        if (!o) throw IoError(fmt::format("{}: cannot open for writing", tmp.string()));
        o.write(content.data(), static_cast<std::streamsize>(content.size()));
        o.flush();
        if (!o) throw IoError(fmt::format("{}: write failed", tmp.string()));
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError(fmt::format("{}: cannot replace output file", path.string()));
    }
}

struct Options {
    std::vector<std::string> inputs;
    std::string output;
    std::string from_sums;
    bool strict = false;
    std::optional<double> dominant_ratio;
    std::optional<double> reactive_ratio;
    std::optional<double> key_threshold;
    std::optional<int> decimals;
    int width = PlotLayout{}.width;
    int height = PlotLayout{}.height;
    std::string out_dir;
    AlertFieldMap fields;
};

class Session {
public:
    Session(const Options &opts, std::ostream &out, std::ostream &err) : opts_(opts), out_(out), err_(err) {}

    int validate() {
        int code = kOk;
        for (const auto &path : opts_.inputs) {
            std::string text;
            try {
                text = read_file(path);
            } catch (const IoError &e) {
                fmt::print(err_, "{}\n", e.what());
                code = std::max<int>(code, kIoError);
                continue;
            }
            const auto parsed = parse_document(text);
            report(path, parsed);
            if (parsed.has_errors() || (opts_.strict && parsed.has_warnings())) {
                code = std::max<int>(code, kContentError);
            }
        }
        return code;
    }

    int matrix() {
        const auto chains = load_chains();
        const auto m = build_matrix(chains);
        const auto table = sums(m);
        emit(export_matrix_csv(m, table, rank_sums(table)));
        return kOk;
    }

    int analyze_cmd() {
        const auto cfg = config();
        emit(export_report_csv(scores(cfg), cfg.display_decimals));
        return kOk;
    }

    int plot() {
        const auto cfg = config();
        PlotLayout layout;
        layout.width = opts_.width;
        layout.height = opts_.height;
        if (layout.width <= layout.margin_left + layout.margin_right ||
            layout.height <= layout.margin_top + layout.margin_bottom) {
            throw std::invalid_argument("canvas is too small for the plot margins");
        }
        emit(render_scatter_svg(scores(cfg), cfg, layout));
        return kOk;
    }

    int dot() {
        RelationshipMatrix network;
        for (const auto &path : opts_.inputs) network = merge(network, build_matrix(load_file(path)));
        emit(export_dot(network));
        return kOk;
    }

    int import_rapex_cmd() {
        const std::string text = read_file(opts_.inputs.front());
        const auto records = read_alert_records(text, opts_.fields);
        const auto result = import_rapex(records);
        for (const auto &w : result.warnings) fmt::print(err_, "warning: {}\n", w);
        if (result.documents.empty()) return kOk;

        const fs::path dir = opts_.out_dir;
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw IoError(fmt::format("{}: cannot create directory", dir.string()));
        for (const auto &doc : result.documents) write_file_atomic(dir / doc.file_name, doc.document);
        return kOk;
    }

private:
    void report(const std::string &path, const ParseResult &parsed) {
        for (const auto &d : parsed.diagnostics) {
            fmt::print(err_, "{}:{}:{}: {}: {}\n", path, d.line, d.column, to_string(d.severity), d.message);
        }
    }

    ChainSet load_file(const std::string &path) {
        auto parsed = parse_document(read_file(path));
        report(path, parsed);
        if (parsed.has_errors() || (opts_.strict && parsed.has_warnings())) {
            throw ValidationFailed{};
        }
        return std::move(parsed.chains);
    }

    ChainSet load_chains() {
        ChainSet all;
        for (const auto &path : opts_.inputs) {
            auto chains = load_file(path);
            all.insert(all.end(), std::make_move_iterator(chains.begin()), std::make_move_iterator(chains.end()));
        }
        return all;
    }

    AnalysisConfig config() const {
        AnalysisConfig cfg;
        if (opts_.dominant_ratio) cfg.dominant_ratio = *opts_.dominant_ratio;
        if (opts_.reactive_ratio) cfg.reactive_ratio = *opts_.reactive_ratio;
        if (opts_.key_threshold) cfg.key_threshold = *opts_.key_threshold;
        if (opts_.decimals) cfg.display_decimals = *opts_.decimals;
        cfg.validate();
        return cfg;
    }

    FactorScores scores(const AnalysisConfig &cfg) {
        if (!opts_.from_sums.empty()) return analyze(read_sums_csv(read_file(opts_.from_sums)), cfg);
        return analyze(load_chains(), cfg);
    }

    void emit(const std::string &content) {
        if (opts_.output.empty() || opts_.output == "-") {
            out_ << content;
            out_.flush();
            return;
        }
        write_file_atomic(opts_.output, content);
    }

    const Options &opts_;
    std::ostream &out_;
    std::ostream &err_;
};

void add_output(CLI::App *cmd, Options &opts) {
    cmd->add_option("-o,--output", opts.output, "Output file (default: standard output)");
}

void add_strict(CLI::App *cmd, Options &opts) {
    cmd->add_flag("--strict", opts.strict, "Treat warnings as errors");
}

void add_analysis(CLI::App *cmd, Options &opts) {
    auto *sums_opt = cmd->add_option("--from-sums", opts.from_sums,
                                     "Sums CSV (id,category,name,active_sum,passive_sum) instead of chain files");
    auto *files = cmd->add_option("files", opts.inputs, "Chain documents (.chains)");
    sums_opt->excludes(files);
    cmd->add_option("--dominant-ratio", opts.dominant_ratio, "Active/passive ratio at or above which a factor is dominant");
    cmd->add_option("--reactive-ratio", opts.reactive_ratio, "Active/passive ratio at or below which a factor is reactive");
    cmd->add_option("--key-threshold", opts.key_threshold, "Combined normalized sum (0-200) marking a key factor");
    cmd->add_option("--decimals", opts.decimals, "Decimals printed for normalized values");
    add_output(cmd, opts);
    add_strict(cmd, opts);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options opts;
    CLI::App app{"Key-factor identification for failure scenarios built from failure-database records", "keyfactor"};
    app.require_subcommand(1);

    auto *validate = app.add_subcommand("validate", "Check chain documents and print diagnostics");
    validate->add_option("files", opts.inputs, "Chain documents (.chains)");
    add_strict(validate, opts);

    auto *matrix = app.add_subcommand("matrix", "Write the influence-factor relationship matrix as CSV");
    matrix->add_option("files", opts.inputs, "Chain documents (.chains)");
    add_output(matrix, opts);
    add_strict(matrix, opts);

    auto *analyze_cmd = app.add_subcommand("analyze", "Write the factor report (sums, normalized values, ranks, regions)");
    add_analysis(analyze_cmd, opts);

    auto *plot = app.add_subcommand("plot", "Write the active/passive sum diagram as SVG");
    add_analysis(plot, opts);
    plot->add_option("--width", opts.width, "Canvas width in pixels");
    plot->add_option("--height", opts.height, "Canvas height in pixels");

    auto *dot = app.add_subcommand("dot", "Write the merged failure network in DOT");
    dot->add_option("files", opts.inputs, "Chain documents (.chains)");
    add_output(dot, opts);
    add_strict(dot, opts);

    auto *rapex = app.add_subcommand("import-rapex", "Write one skeleton chain document per alert and risk type");
    rapex->add_option("alerts", opts.inputs, "JSON array of alert records")->required()->expected(1);
    rapex->add_option("-d,--out-dir", opts.out_dir, "Directory for the generated .chains files")->required();
    rapex->add_option("--alert-field", opts.fields.alert_number, "Field holding the alert number");
    rapex->add_option("--product-field", opts.fields.product, "Field holding the product");
    rapex->add_option("--risk-field", opts.fields.risk, "Field holding the risk type(s)");
    rapex->add_option("--description-field", opts.fields.description, "Field holding the description");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        fmt::print(err, "error: {}\n{}", e.what(), app.help());
        return kContentError;
    }

    auto *selected = app.get_subcommands().front();
    const bool needs_files = selected != rapex && opts.from_sums.empty();
    if (needs_files && opts.inputs.empty()) {
        fmt::print(err, "error: no input files given\n{}", selected->help());
        return kContentError;
    }

    Session session(opts, out, err);
    try {
        if (selected == validate) return session.validate();
        if (selected == matrix) return session.matrix();
        if (selected == analyze_cmd) return session.analyze_cmd();
        if (selected == plot) return session.plot();
        if (selected == dot) return session.dot();
        return session.import_rapex_cmd();
    } catch (const IoError &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kIoError;
    } catch (const SumsFormatError &e) {
        fmt::print(err, "error: {}: {}\n", opts.from_sums, e.what());
        return kIoError;
    } catch (const AlertFormatError &e) {
        fmt::print(err, "error: {}\n", e.what());
        return e.document_level() ? kIoError : kContentError;
    } catch (const ValidationFailed &) {
        return kContentError;
    } catch (const std::exception &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kContentError;
    }
}

}  // namespace keyfactor::cli
