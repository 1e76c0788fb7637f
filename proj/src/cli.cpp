#include "cript/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cript/bitmap.hpp"
#include "cript/code_model.hpp"
#include "cript/encoder.hpp"
#include "cript/error.hpp"
#include "cript/matcher.hpp"
#include "cript/realizer.hpp"
#include "cript/simplifier.hpp"

namespace cript::cli {

namespace {

using json = nlohmann::ordered_json;

/// I/O failures map to exit status 2 like format errors.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<std::string> inputs;
  std::string output;
  std::string format;
  int min_gap = 1;
  bool raster = false;
  bool svg = false;
  double ppu = 2.0;
  std::size_t top_k = 3;
  std::string dict;
  double band_height = 4.0;
  double spacing = 4.0;
};

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path);
  return read_all(file);
}

Bitmap parse_bitmap(const std::string& text, const std::string& format) {
  if (format == "pbm") return load_bitmap(text, ImageFormat::pbm);
  if (format == "ascii") return load_bitmap(text, ImageFormat::ascii);
  return load_bitmap(text);
}

std::vector<std::string> inputs_or_stdin(const Config& cfg) {
  return cfg.inputs.empty() ? std::vector<std::string>{"-"} : cfg.inputs;
}

/// Code words arrive as plain text, as `encode` JSON ("minimal") or as the
/// JSON list printed by `components`.
std::vector<std::string> code_texts(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) return {text};
  std::vector<std::string> out;
  std::istringstream lines(text);
  // Accept one JSON document per line as produced for multiple inputs.
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      for (auto& s : code_texts(line)) out.push_back(std::move(s));
    }
    return out;
  }
  auto take = [&](const json& item) {
    if (item.is_string()) {
      out.push_back(item.get<std::string>());
    } else if (item.is_object() && item.contains("minimal") && item["minimal"].is_string()) {
      out.push_back(item["minimal"].get<std::string>());
    } else {
      throw FormatError("expected a code string or an object with \"minimal\"", 1, 1);
    }
  };
  if (doc.is_array()) {
    for (const auto& item : doc) take(item);
  } else {
    take(doc);
  }
  return out;
}

void write_output(const Config& cfg, const std::string& data, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << data;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw IoError("cannot write " + cfg.output);
  file << data;
}

json report_json(const ValidationReport& report, int code_index = -1) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json item;
    item["rule"] = rule_name(v.rule);
    item["string"] = v.string_index < 0 ? json(nullptr) : json(v.string_index);
    item["position"] = v.position < 0 ? json(nullptr) : json(v.position);
    item["message"] = v.message;
    if (code_index >= 0) item["code"] = code_index;
    violations.push_back(std::move(item));
  }
  return violations;
}

bool use_color() {
  return std::getenv("CRIPT_NO_COLOR") == nullptr && ::isatty(STDERR_FILENO) == 1;
}

/// One human line per input on a terminal; JSON on stdout stays untouched.
void human_line(std::ostream& err, const std::string& source, const std::string& code) {
  if (::isatty(STDERR_FILENO) != 1) return;
  if (use_color())
    err << "\033[1m" << source << "\033[0m: \033[32m" << code << "\033[0m\n";
  else
    err << source << ": " << code << "\n";
}

/// Runs `fn` over every input, possibly in parallel; results keep input order.
template <typename Fn>
std::vector<std::string> for_each_input(const std::vector<std::string>& inputs, Fn fn) {
  std::vector<std::string> results(inputs.size());
  std::vector<std::exception_ptr> errors(inputs.size());
#pragma omp parallel for schedule(dynamic) if (inputs.size() > 1)
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    try {
      results[i] = fn(inputs[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

int cmd_encode(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto inputs = inputs_or_stdin(cfg);
  std::string stdin_text;
  if (std::find(inputs.begin(), inputs.end(), "-") != inputs.end()) stdin_text = read_all(in);
  auto lines = for_each_input(inputs, [&](const std::string& path) {
    const std::string text = path == "-" ? stdin_text : read_input(path, in);
    const FullCode f = encode(parse_bitmap(text, cfg.format));
    json doc;
    doc["width"] = f.width;
    doc["height"] = f.height;
    json bands = json::array();
    for (const auto& band : f.bands)
      bands.push_back({{"level", band.level}, {"string", to_string(band.string())}, {"trivial", band.trivial()}});
    doc["bands"] = std::move(bands);
    doc["minimal"] = serialize_code(minimal_code(f));
    return doc.dump() + "\n";
  });
  std::string all;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    all += lines[i];
    human_line(err, inputs[i], json::parse(lines[i])["minimal"].get<std::string>());
  }
  write_output(cfg, all, out);
  return 0;
}

int cmd_validate(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto codes = code_texts(read_input(cfg.inputs.empty() ? "-" : cfg.inputs.front(), in));
  bool valid = true;
  json violations = json::array();
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto report = validate_text(codes[i]);
    valid = valid && report.valid();
    for (auto& v : report_json(report, codes.size() > 1 ? static_cast<int>(i) : -1)) violations.push_back(v);
  }
  json doc;
  doc["valid"] = valid;
  doc["violations"] = std::move(violations);
  write_output(cfg, doc.dump() + "\n", out);
  return valid ? 0 : 1;
}

CriptCode single_valid_code(const Config& cfg, std::istream& in) {
  const auto codes = code_texts(read_input(cfg.inputs.empty() ? "-" : cfg.inputs.front(), in));
  if (codes.size() != 1) throw DomainError("expected exactly one code, got " + std::to_string(codes.size()));
  auto report = validate_text(codes.front());
  if (!report.valid()) throw InvalidCodeError(std::move(report));
  return parse_code(codes.front());
}

int cmd_components(const Config& cfg, std::istream& in, std::ostream& out) {
  const CriptCode code = single_valid_code(cfg, in);
  json list = json::array();
  for (const auto& c : domain_components(code)) list.push_back(serialize_code(c));
  write_output(cfg, list.dump() + "\n", out);
  return 0;
}

int cmd_realize(const Config& cfg, std::istream& in, std::ostream& out) {
  const CriptCode code = single_valid_code(cfg, in);
  const PlanarBoundary p = realize(code, {cfg.band_height, cfg.spacing});
  const bool raster = cfg.raster || cfg.format == "pbm" || cfg.format == "ascii";
  if (raster && !cfg.svg) {
    const Bitmap b = rasterize(p, cfg.ppu);
    write_output(cfg, save_bitmap(b, cfg.format == "ascii" ? ImageFormat::ascii : ImageFormat::pbm), out);
  } else {
    check_simple(p);
    write_output(cfg, to_svg(p), out);
  }
  return 0;
}

int cmd_simplify(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto inputs = inputs_or_stdin(cfg);
  std::string stdin_text;
  if (std::find(inputs.begin(), inputs.end(), "-") != inputs.end()) stdin_text = read_all(in);
  auto lines = for_each_input(inputs, [&](const std::string& path) {
    const std::string text = path == "-" ? stdin_text : read_input(path, in);
    const FullCode f = encode(parse_bitmap(text, cfg.format));
    const SimplifyResult s = simplify_detailed(f, cfg.min_gap);
    json doc;
    doc["min_gap"] = cfg.min_gap;
    doc["minimal"] = serialize_code(minimal_code(f));
    doc["simplified"] = serialize_code(s.code);
    doc["clusters"] = s.clusters.size();
    doc["deleted_components"] = s.deleted.size();
    doc["fallback_ordering"] = !s.fallback_clusters.empty();
    json fallback = json::array();
    for (int c : s.fallback_clusters)
      fallback.push_back(f.bands[static_cast<std::size_t>(s.clusters[static_cast<std::size_t>(c)].first_band)].level);
    doc["fallback_levels"] = std::move(fallback);
    return doc.dump() + "\n";
  });
  std::string all;
  for (auto& l : lines) all += l;
  write_output(cfg, all, out);
  return 0;
}

CodeDictionary load_dict_file(const std::string& path) {
  CodeDictionary dict;
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open dictionary " + path);
  load_dictionary(read_all(file), dict);
  return dict;
}

int cmd_match(const Config& cfg, std::istream& in, std::ostream& out) {
  if (cfg.dict.empty()) throw IoError("match needs --dict PATH");
  const CodeDictionary dict = load_dict_file(cfg.dict);
  const auto inputs = inputs_or_stdin(cfg);
  std::string stdin_text;
  if (std::find(inputs.begin(), inputs.end(), "-") != inputs.end()) stdin_text = read_all(in);
  auto lines = for_each_input(inputs, [&](const std::string& path) {
    const std::string text = path == "-" ? stdin_text : read_input(path, in);
    const Classification c = classify(parse_bitmap(text, cfg.format), dict, cfg.top_k, cfg.min_gap);
    json doc;
    doc["code"] = c.code;
    doc["no_glyph"] = c.no_glyph;
    json matches = json::array();
    for (const auto& m : c.matches)
      matches.push_back({{"labels", m.labels}, {"code", m.code}, {"distance", m.distance}});
    doc["matches"] = std::move(matches);
    return doc.dump() + "\n";
  });
  std::string all;
  for (auto& l : lines) all += l;
  write_output(cfg, all, out);
  return 0;
}

int cmd_dict_build(const Config& cfg, std::istream& in, std::ostream& out) {
  CodeDictionary dict;
  if (!cfg.dict.empty() && std::filesystem::exists(cfg.dict)) dict = load_dict_file(cfg.dict);
  std::size_t samples = 0;
  for (const auto& arg : cfg.inputs) {
    // "LABEL=PATH", or a bare path labelled by its file stem.
    std::string label, path = arg;
    if (auto eq = arg.find('='); eq != std::string::npos) {
      label = arg.substr(0, eq);
      path = arg.substr(eq + 1);
    } else {
      label = std::filesystem::path(arg).stem().string();
    }
    add_sample(dict, parse_bitmap(read_input(path, in), cfg.format), label, cfg.min_gap);
    ++samples;
  }
  const std::string text = save_dictionary(dict);
  if (cfg.dict.empty()) {
    write_output(cfg, text, out);
    return 0;
  }
  std::ofstream file(cfg.dict, std::ios::binary);
  if (!file) throw IoError("cannot write dictionary " + cfg.dict);
  file << text;
  json doc;
  doc["dict"] = cfg.dict;
  doc["samples"] = samples;
  doc["entries"] = dict.entries.size();
  write_output(cfg, doc.dump() + "\n", out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"CRIPT topological contour codes of black-white images", "cript"};
  app.require_subcommand(1);
  Config cfg;

  auto add_inputs = [&](CLI::App* sub, const char* what) {
    sub->add_option("inputs", cfg.inputs, what);
    sub->add_option("-o,--output", cfg.output, "Output path (default stdout)");
  };
  auto add_image_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Input image format (default: detect)")
        ->check(CLI::IsMember({"pbm", "ascii"}));
  };
  auto add_min_gap = [&](CLI::App* sub) {
    sub->add_option("--min-gap", cfg.min_gap, "Rows between separate level clusters")->check(CLI::PositiveNumber);
  };

  auto* encode_cmd = app.add_subcommand("encode", "Full and minimal code of bitmaps (JSON)");
  add_inputs(encode_cmd, "Bitmap files; stdin when absent");
  add_image_format(encode_cmd);

  auto* validate_cmd = app.add_subcommand("validate", "Check a code word (JSON report)");
  add_inputs(validate_cmd, "Code file; stdin when absent");

  auto* components_cmd = app.add_subcommand("components", "Codes of the domain's connected components");
  add_inputs(components_cmd, "Code file; stdin when absent");

  auto* realize_cmd = app.add_subcommand("realize", "Polygonal domain for a code (SVG or raster)");
  add_inputs(realize_cmd, "Code file; stdin when absent");
  realize_cmd->add_option("--format", cfg.format, "svg, or pbm/ascii for raster output")
      ->check(CLI::IsMember({"svg", "pbm", "ascii"}));
  realize_cmd->add_flag("--svg", cfg.svg, "SVG output (default)");
  realize_cmd->add_flag("--raster", cfg.raster, "Rasterize instead of SVG");
  realize_cmd->add_option("--ppu", cfg.ppu, "Pixels per unit when rasterizing")->check(CLI::PositiveNumber);
  realize_cmd->add_option("--band-height", cfg.band_height, "Vertical distance between levels")->check(CLI::PositiveNumber);
  realize_cmd->add_option("--spacing", cfg.spacing, "Horizontal distance between letters")->check(CLI::PositiveNumber);

  auto* simplify_cmd = app.add_subcommand("simplify", "Merge close critical levels and drop noise");
  add_inputs(simplify_cmd, "Bitmap files; stdin when absent");
  add_image_format(simplify_cmd);
  add_min_gap(simplify_cmd);

  auto* match_cmd = app.add_subcommand("match", "Rank dictionary entries against glyphs");
  add_inputs(match_cmd, "Bitmap files; stdin when absent");
  add_image_format(match_cmd);
  add_min_gap(match_cmd);
  match_cmd->add_option("--dict", cfg.dict, "Dictionary file")->required();
  match_cmd->add_option("--top-k", cfg.top_k, "Number of results")->check(CLI::PositiveNumber);

  auto* dict_cmd = app.add_subcommand("dict-build", "Add labelled glyphs (LABEL=PATH or PATH) to a dictionary");
  add_inputs(dict_cmd, "Glyph bitmaps");
  add_image_format(dict_cmd);
  add_min_gap(dict_cmd);
  dict_cmd->add_option("--dict", cfg.dict, "Dictionary file to create or extend");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }

  try {
    if (*encode_cmd) return cmd_encode(cfg, in, out, err);
    if (*validate_cmd) return cmd_validate(cfg, in, out);
    if (*components_cmd) return cmd_components(cfg, in, out);
    if (*realize_cmd) return cmd_realize(cfg, in, out);
    if (*simplify_cmd) return cmd_simplify(cfg, in, out);
    if (*match_cmd) return cmd_match(cfg, in, out);
    if (*dict_cmd) return cmd_dict_build(cfg, in, out);
  } catch (const InvalidCodeError& e) {
    json doc;
    doc["valid"] = false;
    doc["violations"] = report_json(e.report());
    out << doc.dump() << "\n";
    err << "cript: " << e.what() << "\n";
    return 1;
  } catch (const FormatError& e) {
    err << "cript: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "cript: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "cript: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "cript: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cript::cli
