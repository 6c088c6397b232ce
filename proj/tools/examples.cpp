// Regenerates the reference configs under configs/ from the canned scenario
// builders. Run after changing a builder, then commit the result.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "likegame/io_json.hpp"
#include "likegame/scenarios.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: likegame-examples <output-dir>\n";
    return 1;
  }
  namespace fs = std::filesystem;
  namespace sc = likegame::scenarios;
  fs::path dir = argv[1];
  fs::create_directories(dir);

  likegame::io::save_config(sc::equilibrium_family().front(),
                            dir / "equilibrium_small.json");
  likegame::io::save_config(sc::two_player_quid_pro_quo(2, false),
                            dir / "quid_pro_quo.json");
  likegame::io::save_config(sc::majority_dominance(false),
                            dir / "majority_dominance.json");
  likegame::io::save_config(sc::false_consensus(11),
                            dir / "false_consensus.json");
  likegame::io::save_config(sc::echo_chamber(7), dir / "echo_chamber.json");
  likegame::io::save_config(sc::signal_boost(1, true),
                            dir / "signal_boost_boosted.json");
  likegame::io::save_config(sc::signal_boost(1, false),
                            dir / "signal_boost_control.json");

  std::ofstream sweep(dir / "sweep_example.json");
  sweep << R"({
  "schema": "likegame-sweep/1",
  "base_config": "echo_chamber.json",
  "parameters": [
    {"path": "/visibility_floor", "values": [0.05, 0.2, 1.0]}
  ],
  "seeds": {"count": 3}
}
)";
  std::cout << "wrote reference configs to " << dir.string() << "\n";
  return 0;
}
