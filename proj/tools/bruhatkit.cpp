#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bruhatkit/cli.hpp"
#include "bruhatkit/errors.hpp"

namespace bk = bruhatkit;

namespace {

int fail(int code, const std::string& kind, const std::string& message) {
  nlohmann::ordered_json err{{"error", kind}, {"message", message}, {"exit_code", code}};
  std::cerr << err.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat cells, gradings and real-form criteria for flag manifolds"};
  std::string config_path;
  std::vector<std::string> tasks;
  std::optional<std::string> out_path;
  std::optional<std::size_t> weyl_cap;
  std::optional<std::uint64_t> seed;
  bool text = false;
  app.add_option("--config", config_path, "YAML job file");
  app.add_option("--task", tasks, "task to run (repeatable, overrides the config)");
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");
  app.add_option("--weyl-cap", weyl_cap, "maximum Weyl group order");
  app.add_option("--seed", seed, "seed for the random verification samples");
  app.add_flag("--text", text, "print a human-readable rendering");
  app.set_version_flag("--version", std::string(bk::cli::kVersion));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : bk::cli::kValidation;
  }
  if (config_path.empty()) return fail(bk::cli::kValidation, "validation", "--config is required");

  try {
    auto config = bk::cli::load_config(config_path);
    if (!tasks.empty()) {
      config.tasks.clear();
      for (const auto& t : tasks) {
        const auto task = bk::cli::parse_task(t);
        if (std::find(config.tasks.begin(), config.tasks.end(), task) == config.tasks.end())
          config.tasks.push_back(task);
      }
    }
    if (weyl_cap) {
      if (*weyl_cap == 0) throw bk::ValidationError("--weyl-cap must be positive");
      config.weyl_cap = *weyl_cap;
    }
    if (seed) config.seed = *seed;
    if (out_path) config.output = *out_path;

    const auto result = bk::cli::run(config);
    const std::string body = text ? bk::cli::render_text(result.report) : result.report.dump(2) + "\n";
    if (config.output)
      bk::cli::write_atomically(*config.output, body);
    else
      std::cout << body;
    if (result.identity_failure)
      return fail(bk::cli::kIdentityFailure, "identity_check", "identity checks failed; see the report");
    return bk::cli::kOk;
  } catch (const bk::ValidationError& e) {
    return fail(bk::cli::kValidation, "validation", e.what());
  } catch (const bk::CapExceeded& e) {
    return fail(bk::cli::kCapExceeded, "cap_exceeded", e.what());
  } catch (const bk::IdentityCheckFailure& e) {
    return fail(bk::cli::kIdentityFailure, "identity_check", e.what());
  }
}
