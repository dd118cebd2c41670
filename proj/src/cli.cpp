#include "cnoise/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "cnoise/conditioning.hpp"
#include "cnoise/error.hpp"
#include "cnoise/manifest.hpp"
#include "cnoise/metrics.hpp"
#include "cnoise/noise_gen.hpp"
#include "cnoise/spectral.hpp"
#include "cnoise/synthset.hpp"
#include "cnoise/tensor_io.hpp"
#include "cnoise/wavelet.hpp"
#include "json.hpp"

namespace cnoise::cli {

namespace fs = std::filesystem;
using nlohmann::json;

// =============================================================================
// Sweep
// =============================================================================

std::vector<SweepRow> sweep(std::span<const double> alphas, std::span<const double> gammas, const Latent& z,
                            const Latent& c, std::size_t bins) {
    if (alphas.empty() || gammas.empty()) fail(ErrorCode::usage, "sweep grids must be nonempty");
    std::vector<SweepRow> rows;
    for (double a : alphas) {
        for (double g : gammas) {
            SweepRow row{a, g, std::nullopt, {}};
            try {
                ConditioningConfig cfg;
                cfg.alpha = a;
                cfg.gamma = g;
                row.whiteness = whiteness(colorful_noise(z, c, cfg), bins).score;
            } catch (const Error& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string csv = "alpha,gamma,whiteness,error\n";
    for (const auto& r : rows) {
        csv += format_double(r.alpha) + "," + format_double(r.gamma) + "," +
               (r.whiteness ? format_double(*r.whiteness) : std::string{}) + "," + csv_field(r.error) + "\n";
    }
    return csv;
}

// =============================================================================
// Config files
// =============================================================================

namespace {

// JSON counterpart of CLI11's TOML reader: {"condition": {"alpha": 0.1}}.
class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        json j = json::parse(input, nullptr, false);
        if (j.is_discarded() || !j.is_object()) throw CLI::ConversionError("config file is not a JSON object");
        std::vector<CLI::ConfigItem> items;
        collect(j, "", {}, items);
        return items;
    }

private:
    static std::string scalar(const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
        if (v.is_number()) return v.dump();
        throw CLI::ConversionError("unsupported JSON config value " + v.dump());
    }

    static void collect(const json& j, const std::string& name, std::vector<std::string> parents,
                        std::vector<CLI::ConfigItem>& items) {
        if (j.is_object()) {
            if (!name.empty()) parents.push_back(name);
            for (auto it = j.begin(); it != j.end(); ++it) collect(*it, it.key(), parents, items);
            return;
        }
        CLI::ConfigItem item;
        item.name = name;
        item.parents = parents;
        if (j.is_array()) {
            for (const auto& v : j) item.inputs.push_back(scalar(v));
        } else {
            item.inputs.push_back(scalar(j));
        }
        items.push_back(std::move(item));
    }
};

bool wants_json_config(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string value;
        if (args[i] == "--config" && i + 1 < args.size()) value = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) value = args[i].substr(9);
        if (!value.empty()) return fs::path(value).extension() == ".json";
    }
    return false;
}

// =============================================================================
// Shared helpers
// =============================================================================

struct Options {
    // shared
    std::string output;
    std::string latent;
    std::string cond;
    std::string image;
    double alpha = 0.125;
    double beta = 1.0;
    double gamma = 0.2;
    std::uint64_t seed = 0;
    std::vector<std::size_t> shape{4, 128, 128};
    std::string kind = "white";
    double cutoff = 0.25;
    std::size_t bins = 16;
    // condition
    std::string transform = "fft";
    std::size_t levels = 3;
    std::string basis = "haar";
    std::string mask;
    double t = 1.0;
    bool renorm = false;
    // inject
    std::string ref;
    std::string band = "low";
    // mix
    std::size_t seeds = 10;
    std::vector<std::string> inputs;
    // blend / interp
    std::string zc;
    std::vector<double> ts;
    std::size_t steps = 0;
    // emd / cosine-bands
    std::string a;
    std::string b;
    std::size_t patch = 64;
    std::size_t hist_bins = 32;
    // silhouette
    std::string distances;
    std::string labels;
    // synthset
    std::size_t count = 1000;
    std::vector<std::size_t> size{512, 512};
    std::vector<double> radius_range{0.1, 0.45};
    // sweep
    std::vector<double> alphas;
    std::vector<double> gammas;
    // replay
    std::string manifest;
};

Shape to_shape(const std::vector<std::size_t>& v) { return Shape{v.at(0), v.at(1), v.at(2)}; }

NoiseConfig noise_config(const Options& o, const Shape& shape) {
    return NoiseConfig{parse_noise_kind(o.kind), o.seed, shape, o.cutoff};
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::io_failure, "cannot open " + path.string() + " for writing");
    out << text;
    if (!out) fail(ErrorCode::io_failure, "write to " + path.string() + " failed");
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io_failure, "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) fail(ErrorCode::io_failure, "cannot create directory " + dir.string());
}

json snapshot(const CLI::App* sub) {
    json cfg = json::object();
    for (const CLI::Option* opt : sub->get_options()) {
        const auto& lnames = opt->get_lnames();
        if (lnames.empty() || lnames.front() == "help") continue;
        const auto& results = opt->results();
        if (results.empty()) {
            cfg[lnames.front()] = opt->get_default_str();
        } else if (results.size() == 1) {
            cfg[lnames.front()] = results.front();
        } else {
            cfg[lnames.front()] = results;
        }
    }
    return cfg;
}

// Writes a JSON report to -o (with manifest) or to stdout.
void emit_report(const Options& o, RunManifest& m, const json& report, std::ostream& out) {
    if (o.output.empty()) {
        out << report.dump(2) << '\n';
        return;
    }
    write_text(o.output, report.dump(2) + "\n");
    m.add_output(o.output);
    write_manifest(m, manifest_path_for(o.output));
}

Latent load_latent(const std::string& path, RunManifest& m) {
    m.add_input(path);
    return read_latent(path);
}

// The conditioning latent: an .npy via -c, or a PNG lifted to a pseudolatent.
Latent load_conditioning(const Options& o, const Shape& shape, RunManifest& m) {
    if (!o.cond.empty()) return load_latent(o.cond, m);
    if (!o.image.empty()) {
        m.add_input(o.image);
        return image_to_pseudolatent(read_png_rgb(o.image), shape);
    }
    fail(ErrorCode::usage, "either -c/--cond or --image is required");
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// =============================================================================
// Subcommands
// =============================================================================

void cmd_noise(const Options& o, RunManifest& m, std::ostream&) {
    const NoiseConfig cfg = noise_config(o, to_shape(o.shape));
    write_latent(sample_noise(cfg), o.output);
    m.add_output(o.output);
    write_manifest(m, manifest_path_for(o.output));
}

void cmd_decompose(const Options& o, RunManifest& m, std::ostream&) {
    const Latent z = load_latent(o.latent, m);
    const SpectrumBands bands = decompose(z, BandSpec(o.alpha, o.beta, z.height(), z.width()));
    ensure_directory(o.output);
    json energies = json::object();
    json counts = json::object();
    for (Band b : kAllBands) {
        const fs::path p = fs::path(o.output) / (std::string(to_string(b)) + ".npy");
        write_latent(Latent::from_doubles(z.shape(), band_signal(bands, b)), p);
        m.add_output(p);
        energies[std::string(to_string(b))] = band_energy(bands, b);
        counts[std::string(to_string(b))] = bands.spec().count(b);
    }
    m.extra = {{"band_energy", energies}, {"bin_count", counts}};
    write_manifest(m, manifest_path_for(o.output));
}

void cmd_condition(const Options& o, RunManifest& m, std::ostream&) {
    std::optional<Latent> z;
    if (!o.latent.empty()) z = load_latent(o.latent, m);
    const Shape shape = z ? z->shape() : to_shape(o.shape);
    const Latent c = load_conditioning(o, shape, m);
    if (!z) z = sample_noise(noise_config(o, c.shape()));

    ConditioningConfig cfg;
    cfg.alpha = o.alpha;
    cfg.gamma = o.gamma;
    cfg.transform = parse_transform(o.transform);
    cfg.dwt_levels = o.levels;
    cfg.dwt_basis = parse_wavelet_basis(o.basis);
    cfg.interp_t = o.t;
    cfg.renorm = o.renorm;
    cfg.base_noise = noise_config(o, z->shape());
    if (!o.mask.empty()) {
        m.add_input(o.mask);
        cfg.mask = read_mask(o.mask, z->height(), z->width());
    }
    write_latent(condition(*z, c, cfg), o.output);
    m.add_output(o.output);
    write_manifest(m, manifest_path_for(o.output));
}

void cmd_inject(const Options& o, RunManifest& m, std::ostream&) {
    const Latent z = load_latent(o.latent, m);
    Latent ref = z;
    if (!o.ref.empty()) {
        ref = load_latent(o.ref, m);
    } else if (!o.image.empty()) {
        m.add_input(o.image);
        ref = image_to_pseudolatent(read_png_rgb(o.image), z.shape());
    } else {
        fail(ErrorCode::usage, "either -r/--ref or --image is required");
    }
    const BandSpec spec(o.alpha, o.beta, z.height(), z.width());
    write_latent(inject_band(z, ref, parse_band(o.band), spec, o.gamma), o.output);
    m.add_output(o.output);
    write_manifest(m, manifest_path_for(o.output));
}

void cmd_mix(const Options& o, RunManifest& m, std::ostream&) {
    std::vector<Latent> sources;
    json source_info = json::array();
    if (!o.inputs.empty()) {
        for (const auto& p : o.inputs) {
            sources.push_back(load_latent(p, m));
            source_info.push_back(p);
        }
    } else {
        if (o.seeds < 1) fail(ErrorCode::usage, "--seeds must be >= 1");
        for (std::size_t i = 0; i < o.seeds; ++i) {
            NoiseConfig cfg = noise_config(o, to_shape(o.shape));
            cfg.seed = o.seed + i;
            sources.push_back(sample_noise(cfg));
            source_info.push_back({{"kind", o.kind}, {"seed", cfg.seed}});
        }
    }
    const BandSpec spec(o.alpha, o.beta, sources.front().height(), sources.front().width());
    std::vector<SpectrumBands> bands;
    for (const auto& s : sources) {
        require_same_shape(sources.front(), s, "mix");
        bands.push_back(decompose(s, spec));
    }

    ensure_directory(o.output);
    const std::size_t n = sources.size();
    json index = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const std::string name = "mix_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                         std::to_string(k) + ".npy";
                const fs::path p = fs::path(o.output) / name;
                write_latent(mix_bands(bands[i], bands[j], bands[k]), p);
                m.add_output(p);
                index.push_back({{"file", name}, {"low", i}, {"mid", j}, {"high", k}});
            }
        }
    }
    m.extra = {{"sources", source_info}, {"index", index}};
    write_manifest(m, manifest_path_for(o.output));
}

void cmd_blend(const Options& o, RunManifest& m, std::ostream&) {
    const Latent z = load_latent(o.latent, m);
    const Latent zc = load_latent(o.zc, m);
    m.add_input(o.mask);
    write_latent(masked_blend(z, zc, read_mask(o.mask, z.height(), z.width())), o.output);
    m.add_output(o.output);
    write_manifest(m, manifest_path_for(o.output));
}

void cmd_interp(const Options& o, RunManifest& m, std::ostream&) {
    const Latent z = load_latent(o.latent, m);
    const Latent zc = load_latent(o.zc, m);
    std::vector<double> ts = o.ts;
    if (o.steps > 0) {
        if (!ts.empty()) fail(ErrorCode::usage, "--t and --steps are mutually exclusive");
        if (o.steps < 2) fail(ErrorCode::usage, "--steps must be >= 2");
        for (std::size_t k = 0; k < o.steps; ++k) ts.push_back(double(k) / double(o.steps - 1));
    }
    if (ts.empty()) ts.push_back(o.t);

    if (ts.size() == 1) {
        write_latent(interpolate(z, zc, ts.front(), o.renorm), o.output);
        m.add_output(o.output);
    } else {
        ensure_directory(o.output);
        json index = json::array();
        for (std::size_t k = 0; k < ts.size(); ++k) {
            const std::string name = "interp_" + std::to_string(k) + ".npy";
            const fs::path p = fs::path(o.output) / name;
            write_latent(interpolate(z, zc, ts[k], o.renorm), p);
            m.add_output(p);
            index.push_back({{"file", name}, {"t", ts[k]}});
        }
        m.extra = {{"index", index}};
    }
    write_manifest(m, manifest_path_for(o.output));
}

void cmd_whiteness(const Options& o, RunManifest& m, std::ostream& out) {
    const Latent z = load_latent(o.latent, m);
    const WhitenessReport r = whiteness(z, o.bins);
    json rows = json::array();
    for (std::size_t c = 0; c < r.channels; ++c) {
        rows.push_back(std::vector<double>(r.per_channel_band_power.begin() + std::ptrdiff_t(c * r.bins),
                                           r.per_channel_band_power.begin() + std::ptrdiff_t((c + 1) * r.bins)));
    }
    emit_report(o, m,
                {{"bins", r.bins}, {"score", r.score}, {"per_channel_band_power", rows}, {"bin_counts", r.bin_counts}},
                out);
}

void cmd_emd(const Options& o, RunManifest& m, std::ostream& out) {
    m.add_input(o.a);
    m.add_input(o.b);
    const EMDReport r = emd(read_png_rgb(o.a), read_png_rgb(o.b), o.patch, o.hist_bins);
    emit_report(o, m,
                {{"localized", r.localized},
                 {"global", r.global},
                 {"patch_size", r.patch_size},
                 {"bins", r.bins},
                 {"per_patch", r.per_patch}},
                out);
}

void cmd_cosine_bands(const Options& o, RunManifest& m, std::ostream& out) {
    const Latent a = load_latent(o.a, m);
    const Latent b = load_latent(o.b, m);
    const BandCosine r = band_cosine(a, b, BandSpec(o.alpha, o.beta, a.height(), a.width()));
    emit_report(o, m, {{"low", optional_json(r.low)}, {"mid", optional_json(r.mid)}, {"high", optional_json(r.high)}},
                out);
}

std::vector<std::string> split_cells(const std::string& text) {
    std::vector<std::string> cells;
    std::string cell;
    for (char ch : text) {
        if (ch == ',' || ch == '\n' || ch == '\r') {
            if (!cell.empty()) cells.push_back(cell);
            cell.clear();
        } else if (ch != ' ' && ch != '\t') {
            cell += ch;
        }
    }
    if (!cell.empty()) cells.push_back(cell);
    return cells;
}

void cmd_silhouette(const Options& o, RunManifest& m, std::ostream& out) {
    m.add_input(o.distances);
    m.add_input(o.labels);
    const auto cells = split_cells(read_text(o.distances));
    const auto labels = split_cells(read_text(o.labels));
    const std::size_t n = labels.size();
    if (cells.size() != n * n) {
        fail(ErrorCode::shape_mismatch, "distance CSV holds " + std::to_string(cells.size()) + " values, expected " +
                                            std::to_string(n * n) + " for " + std::to_string(n) + " labels");
    }
    std::vector<double> values;
    for (const auto& c : cells) {
        try {
            values.push_back(std::stod(c));
        } catch (const std::exception&) {
            fail(ErrorCode::invalid_argument, "non-numeric distance '" + c + "'");
        }
    }
    const double score = silhouette(DistanceMatrix(n, std::move(values)), labels);
    emit_report(o, m, {{"silhouette", score}, {"points", n}}, out);
}

void cmd_synthset(const Options& o, RunManifest& m, std::ostream&) {
    SynthSpec spec;
    spec.seed = o.seed;
    spec.count = o.count;
    spec.height = o.size.at(0);
    spec.width = o.size.at(1);
    spec.radius_min = o.radius_range.at(0);
    spec.radius_max = o.radius_range.at(1);
    spec.validate();

    ensure_directory(o.output);
    json images = json::array();
    for (std::size_t i = 0; i < spec.count; ++i) {
        const SynthImage s = generate_one(spec, i);
        char name[32];
        std::snprintf(name, sizeof name, "synth_%05zu.png", i);
        const fs::path p = fs::path(o.output) / name;
        write_png(p, s.image);
        m.add_output(p);
        json colors = json::array();
        for (const auto& c : s.params.colors) colors.push_back({c[0], c[1], c[2]});
        images.push_back({{"file", name},
                          {"index", i},
                          {"circle_center", {s.params.circle_x, s.params.circle_y}},
                          {"circle_radius", s.params.radius},
                          {"line_point", {s.params.line_x, s.params.line_y}},
                          {"line_angle", s.params.line_angle},
                          {"region_colors", colors}});
    }
    m.extra = {{"images", images}};
    write_manifest(m, manifest_path_for(o.output));
}

void cmd_sweep(const Options& o, RunManifest& m, std::ostream&) {
    const Latent z = load_latent(o.latent, m);
    const Latent c = load_conditioning(o, z.shape(), m);
    write_text(o.output, sweep_csv(sweep(o.alphas, o.gammas, z, c, o.bins)));
    m.add_output(o.output);
    write_manifest(m, manifest_path_for(o.output));
}

void cmd_calibrate(const Options& o, RunManifest& m, std::ostream& out) {
    const Latent z = load_latent(o.latent, m);
    const Latent c = load_conditioning(o, z.shape(), m);
    const double g = calibrate_gamma(z, c, o.alpha);
    emit_report(o, m, {{"alpha", o.alpha}, {"gamma", g}}, out);
}

int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
    const RunManifest recorded = read_manifest(o.manifest);
    if (recorded.command.empty() || recorded.command.front() == "replay") {
        fail(ErrorCode::invalid_argument, "manifest does not record a replayable command");
    }
    const fs::path cwd = fs::current_path();
    if (!recorded.working_directory.empty()) fs::current_path(recorded.working_directory);
    const int code = run(recorded.command, out, err);
    fs::current_path(cwd);
    if (code != ok) return code;

    for (const auto& f : recorded.outputs) {
        if (sha256_file(f.path) != f.sha256) fail(ErrorCode::replay_mismatch, f.path + " differs from the recorded run");
    }
    out << "replay reproduced " << recorded.outputs.size() << " output(s) byte-identically\n";
    return ok;
}

void report_error(std::ostream& err, std::string_view category, std::string_view code, const std::string& message) {
    err << json{{"error", {{"category", category}, {"code", code}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

// =============================================================================
// Entry point
// =============================================================================

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Colorful-noise toolkit: frequency-band conditioning of diffusion noise latents", "cnoise"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    app.set_config("--config", "", "Read option values from a TOML or JSON file (flags take precedence)");
    if (wants_json_config(args)) app.config_formatter(std::make_shared<JsonConfig>());

    Options o;
    const auto kinds = CLI::IsMember({"white", "blue"});

    auto* noise = app.add_subcommand("noise", "Sample a white or blue noise latent");
    noise->add_option("--kind", o.kind, "Noise kind")->check(kinds);
    noise->add_option("--seed", o.seed, "64-bit seed");
    noise->add_option("--shape", o.shape, "C,H,W")->delimiter(',')->expected(3);
    noise->add_option("--cutoff", o.cutoff, "Blue-noise radial cutoff in (0,1)");
    noise->add_option("-o,--output", o.output, "Output .npy")->required();

    auto* dec = app.add_subcommand("decompose", "Split a latent into low/mid/high band signals");
    dec->add_option("-z,--latent", o.latent, "Input latent .npy")->required();
    dec->add_option("--alpha", o.alpha, "Low cutoff");
    dec->add_option("--beta", o.beta, "High cutoff");
    dec->add_option("-o,--output", o.output, "Output directory")->required();

    auto* cond = app.add_subcommand("condition", "Build colorful noise from a noise latent and a condition");
    cond->add_option("-z,--latent", o.latent, "Noise latent .npy (sampled from --kind/--seed if absent)");
    cond->add_option("-c,--cond", o.cond, "Conditioning latent .npy");
    cond->add_option("--image", o.image, "Conditioning PNG, lifted to a pseudolatent");
    cond->add_option("--alpha", o.alpha, "Low-band cutoff");
    cond->add_option("--gamma", o.gamma, "Conditioning scale");
    cond->add_option("--transform", o.transform, "fft or dwt")->check(CLI::IsMember({"fft", "dwt"}));
    cond->add_option("--levels", o.levels, "Wavelet levels (dwt)");
    cond->add_option("--basis", o.basis, "Wavelet basis (dwt)")->check(CLI::IsMember({"haar", "db2"}));
    cond->add_option("--mask", o.mask, "Mask PNG; colorful noise only where the mask is bright");
    cond->add_option("-t,--t", o.t, "Interpolation weight toward colorful noise");
    cond->add_flag("--renorm", o.renorm, "Rescale channels to the variance of z after interpolation");
    cond->add_option("--kind", o.kind, "Base noise kind when -z is absent")->check(kinds);
    cond->add_option("--seed", o.seed, "Base noise seed when -z is absent");
    cond->add_option("--shape", o.shape, "C,H,W when neither -z nor -c fixes it")->delimiter(',')->expected(3);
    cond->add_option("--cutoff", o.cutoff, "Blue-noise cutoff for the base noise");
    cond->add_option("-o,--output", o.output, "Output .npy")->required();

    auto* inj = app.add_subcommand("inject", "Replace one band of z with a scaled band of a reference");
    inj->add_option("-z,--latent", o.latent, "Noise latent .npy")->required();
    inj->add_option("-r,--ref", o.ref, "Reference latent .npy");
    inj->add_option("--image", o.image, "Reference PNG, lifted to a pseudolatent");
    inj->add_option("--band", o.band, "low, mid or high")->check(CLI::IsMember({"low", "mid", "high"}));
    inj->add_option("--alpha", o.alpha, "Low cutoff");
    inj->add_option("--beta", o.beta, "High cutoff");
    inj->add_option("--gamma", o.gamma, "Scale of the injected band");
    inj->add_option("-o,--output", o.output, "Output .npy")->required();

    auto* mix = app.add_subcommand("mix", "Write all n^3 band mixtures of n latents");
    mix->add_option("--seeds", o.seeds, "Number of seeded source latents");
    mix->add_option("--seed", o.seed, "First seed");
    mix->add_option("--kind", o.kind, "Source noise kind")->check(kinds);
    mix->add_option("--cutoff", o.cutoff, "Blue-noise cutoff");
    mix->add_option("--shape", o.shape, "C,H,W")->delimiter(',')->expected(3);
    mix->add_option("--inputs", o.inputs, "Source latents instead of seeds");
    mix->add_option("--alpha", o.alpha, "Low cutoff");
    mix->add_option("--beta", o.beta, "High cutoff");
    mix->add_option("-o,--output", o.output, "Output directory")->required();

    auto* blend = app.add_subcommand("blend", "Spatially blend z and colorful noise through a mask");
    blend->add_option("-z,--latent", o.latent, "Noise latent .npy")->required();
    blend->add_option("--zc", o.zc, "Colorful latent .npy")->required();
    blend->add_option("--mask", o.mask, "Mask PNG")->required();
    blend->add_option("-o,--output", o.output, "Output .npy")->required();

    auto* interp = app.add_subcommand("interp", "Linear interpolation between z and colorful noise");
    interp->add_option("-z,--latent", o.latent, "Noise latent .npy")->required();
    interp->add_option("--zc", o.zc, "Colorful latent .npy")->required();
    interp->add_option("-t,--t", o.ts, "One or more weights in [0,1]")->delimiter(',');
    interp->add_option("--steps", o.steps, "Evenly spaced weights from 0 to 1");
    interp->add_flag("--renorm", o.renorm, "Rescale channels to the variance of z");
    interp->add_option("-o,--output", o.output, "Output .npy (one weight) or directory")->required();

    auto* white = app.add_subcommand("whiteness", "Radial PSD whiteness score");
    white->add_option("-z,--latent", o.latent, "Latent .npy")->required();
    white->add_option("--bins", o.bins, "Radial bins K");
    white->add_option("-o,--output", o.output, "Report JSON (stdout if absent)");

    auto* emdc = app.add_subcommand("emd", "Localized and global colour EMD between two images");
    emdc->add_option("-a", o.a, "First PNG")->required();
    emdc->add_option("-b", o.b, "Second PNG")->required();
    emdc->add_option("--patch", o.patch, "Patch size");
    emdc->add_option("--bins", o.hist_bins, "Histogram bins per channel");
    emdc->add_option("-o,--output", o.output, "Report JSON (stdout if absent)");

    auto* cos = app.add_subcommand("cosine-bands", "Band-wise cosine similarity of two latents");
    cos->add_option("-a", o.a, "First latent .npy")->required();
    cos->add_option("-b", o.b, "Second latent .npy")->required();
    cos->add_option("--alpha", o.alpha, "Low cutoff");
    cos->add_option("--beta", o.beta, "High cutoff");
    cos->add_option("-o,--output", o.output, "Report JSON (stdout if absent)");

    auto* sil = app.add_subcommand("silhouette", "Silhouette score from a distance matrix");
    sil->add_option("--distances", o.distances, "Headerless N x N CSV")->required();
    sil->add_option("--labels", o.labels, "N labels, comma or newline separated")->required();
    sil->add_option("-o,--output", o.output, "Report JSON (stdout if absent)");

    auto* syn = app.add_subcommand("synthset", "Generate the circle+line flat-colour dataset");
    syn->add_option("--seed", o.seed, "Dataset seed");
    syn->add_option("--count", o.count, "Number of images");
    syn->add_option("--size", o.size, "H,W")->delimiter(',')->expected(2);
    syn->add_option("--radius-range", o.radius_range, "Radius range as fractions of min(H,W)")
        ->delimiter(',')
        ->expected(2);
    syn->add_option("-o,--output", o.output, "Output directory")->required();

    auto* swp = app.add_subcommand("sweep", "Whiteness of colorful noise over an alpha x gamma grid");
    swp->add_option("-z,--latent", o.latent, "Noise latent .npy")->required();
    swp->add_option("-c,--cond", o.cond, "Conditioning latent .npy");
    swp->add_option("--image", o.image, "Conditioning PNG");
    swp->add_option("--alphas", o.alphas, "Alpha grid")->delimiter(',')->required();
    swp->add_option("--gammas", o.gammas, "Gamma grid")->delimiter(',')->required();
    swp->add_option("--bins", o.bins, "Radial bins K");
    swp->add_option("-o,--output", o.output, "Output CSV")->required();

    auto* cal = app.add_subcommand("calibrate-gamma", "Closed-form gamma matching white-noise low-band power");
    cal->add_option("-z,--latent", o.latent, "Noise latent .npy")->required();
    cal->add_option("-c,--cond", o.cond, "Conditioning latent .npy");
    cal->add_option("--image", o.image, "Conditioning PNG");
    cal->add_option("--alpha", o.alpha, "Low cutoff");
    cal->add_option("-o,--output", o.output, "Report JSON (stdout if absent)");

    auto* rep = app.add_subcommand("replay", "Re-run a recorded manifest and verify identical outputs");
    rep->add_option("manifest", o.manifest, "Manifest JSON")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::FileError& e) {
        report_error(err, "io", "io_failure", e.what());
        return io_error;
    } catch (const CLI::ParseError& e) {
        report_error(err, "usage", e.get_name(), e.what());
        return usage_error;
    }

    CLI::App* sub = app.get_subcommands().front();
    try {
        if (sub == rep) return cmd_replay(o, out, err);

        RunManifest m;
        m.command = args;
        m.subcommand = sub->get_name();
        m.working_directory = fs::current_path().string();
        m.config = snapshot(sub);
        m.timestamp = utc_timestamp();

        using Handler = void (*)(const Options&, RunManifest&, std::ostream&);
        const std::vector<std::pair<CLI::App*, Handler>> handlers{
            {noise, cmd_noise},   {dec, cmd_decompose},   {cond, cmd_condition},     {inj, cmd_inject},
            {mix, cmd_mix},       {blend, cmd_blend},     {interp, cmd_interp},      {white, cmd_whiteness},
            {emdc, cmd_emd},      {cos, cmd_cosine_bands}, {sil, cmd_silhouette},    {syn, cmd_synthset},
            {swp, cmd_sweep},     {cal, cmd_calibrate},
        };
        for (const auto& [app_ptr, handler] : handlers) {
            if (app_ptr == sub) handler(o, m, out);
        }
        return ok;
    } catch (const Error& e) {
        switch (e.category()) {
            case ErrorCategory::usage: report_error(err, "usage", to_string(e.code()), e.what()); return usage_error;
            case ErrorCategory::io: report_error(err, "io", to_string(e.code()), e.what()); return io_error;
            case ErrorCategory::data: report_error(err, "data", to_string(e.code()), e.what()); return data_error;
        }
    } catch (const fs::filesystem_error& e) {
        report_error(err, "io", "io_failure", e.what());
        return io_error;
    } catch (const std::exception& e) {
        report_error(err, "data", "internal", e.what());
        return data_error;
    }
    return data_error;
}

}  // namespace cnoise::cli
