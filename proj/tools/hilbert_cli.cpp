#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "hilbert/cli.hpp"

int main(int argc, char** argv)
{
  namespace hc = hilbert::cli;
  CLI::App app{"Hilbert functions over Artinian bases: admissibility, developments, segment ideals, bounds"};
  app.require_subcommand(1, 1);

  hc::Options opt;
  std::string output = "json";
  std::uint64_t horizon = 0;
  const std::map<std::string, std::string> help{
      {"gotztst", "Gotzmann development of a numerical polynomial"},
      {"badm", "admissibility and least b of a Hilbert function"},
      {"efec", "layered segment ideal realizing a Hilbert function"},
      {"saturate", "saturation of a layered monomial ideal"},
      {"verify", "compare an ideal's Hilbert function with a spec"},
      {"bounds", "Artinian development, vanishing and regularity bounds"},
      {"mumford", "Mumford regularity of a b-variable polynomial"}};
  for (const auto& name : hc::subcommands()) {
    auto* sub = app.add_subcommand(name, help.count(name) ? help.at(name) : "");
    sub->add_option("--input", opt.input, "payload file, or - for stdin")->default_val("-");
    sub->add_option("--output", output, "json or pretty")->check(CLI::IsMember({"json", "pretty"}))->default_val("json");
    sub->add_option("--horizon", horizon, "degree horizon for oracle checks");
    sub->add_flag("--expand-c", opt.expand_c, "list Gotzmann coefficients (developments up to 10^4 terms)");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? hc::ok : hc::input_error;
  }
  opt.subcommand = app.get_subcommands().front()->get_name();
  opt.output = output == "pretty" ? hc::OutputMode::pretty : hc::OutputMode::json;
  if (app.get_subcommands().front()->count("--horizon") > 0) opt.horizon = horizon;
  return hc::dispatch(opt, std::cin, std::cout, std::cerr);
}
