// spinent: command-line front end.
//
//   spinent point   --config run.json
//   spinent sweep   --preset fig1b --set omega_l=0.6MHz_rad --out results/
//   spinent figure  fig3 --out results/

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinent/commands.hpp"
#include "spinent/config.hpp"
#include "spinent/errors.hpp"
#include "spinent/output.hpp"

namespace {

nlohmann::json load_document(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw spinent::ConfigError("--config: cannot read '" + path + "'");
  std::stringstream buf;
  buf << is.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw spinent::ConfigError("--config: malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of two cascaded spinning optomechanical resonators"};
  app.set_version_flag("--version", spinent::version());

  std::string command;
  std::string figure_arg;
  std::string config_path;
  std::string preset;
  std::string figure_flag;
  std::vector<std::string> overrides;
  std::string out_dir;
  unsigned threads = 0;
  int resolution = 0;
  bool dump_matrices = false;
  bool print_config = false;

  app.add_option("command", command, "point | pair | sweep | revival | wigner | figure")
      ->required()
      ->check(CLI::IsMember({"point", "pair", "sweep", "revival", "wigner", "figure"}));
  app.add_option("name", figure_arg, "figure preset name (figure command)");
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--preset", preset, "start from a figure preset's scenario");
  app.add_option("--figure", figure_flag, "figure preset to reproduce");
  app.add_option("--set", overrides, "scenario override key=value, e.g. eta_f=0.9 or omega_l=0.8MHz_rad");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--threads", threads, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--resolution", resolution, "points per figure axis")->check(CLI::PositiveNumber);
  app.add_flag("--dump-matrices", dump_matrices, "include A, D and V in point/pair output");
  app.add_flag("--print-config", print_config, "print the resolved config and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; every usage error is a config error.
    return app.exit(e) == 0 ? spinent::exit_ok : spinent::exit_config;
  }

  try {
    nlohmann::json doc = config_path.empty() ? nlohmann::json::object() : load_document(config_path);
    if (!doc.is_object()) throw spinent::ConfigError("config: expected a JSON object");
    doc["command"] = command;
    if (!figure_arg.empty() && !figure_flag.empty() && figure_arg != figure_flag)
      throw spinent::ConfigError("figure: conflicting names '" + figure_arg + "' and '" + figure_flag + "'");
    if (!figure_arg.empty()) doc["figure"] = figure_arg;
    if (!figure_flag.empty()) doc["figure"] = figure_flag;
    if (!preset.empty()) doc["preset"] = preset;
    for (const std::string& o : overrides) spinent::apply_override(doc, o);
    if (!out_dir.empty()) doc["out"] = out_dir;
    if (threads > 0) doc["threads"] = threads;
    if (resolution > 0) doc["resolution"] = resolution;
    if (dump_matrices) doc["dump_matrices"] = true;

    const spinent::RunConfig cfg = spinent::parse_config(doc);
    if (print_config) {
      std::cout << spinent::to_json_text(spinent::emit_config(cfg));
      return spinent::exit_ok;
    }
    return spinent::run(cfg, std::cerr);
  } catch (...) {
    return spinent::exit_code_for_current_exception(std::cerr);
  }
}
