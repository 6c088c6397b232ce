#pragma once

// Shared fixtures: tiny hand-built configs, a self-cleaning scratch
// directory, and whole-file reads for byte comparisons.

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "likegame/types.hpp"

namespace test_support {

inline likegame::ContentItem item(std::string id, likegame::Vec v, std::string author) {
  likegame::ContentItem c;
  c.id = likegame::ContentId{std::move(id)};
  c.vector = std::move(v);
  c.author = likegame::PlayerId{std::move(author)};
  return c;
}

inline likegame::PlayerSpec player(std::string id, double gamma, likegame::Vec ideal,
                                   std::vector<likegame::ContentItem> pool) {
  likegame::PlayerSpec p;
  p.id = likegame::PlayerId{std::move(id)};
  p.gamma = gamma;
  p.ideal = std::move(ideal);
  p.pool = std::move(pool);
  return p;
}

// Two idealists with one pool item each; Perfect info, horizon 2.
inline likegame::GameConfig tiny_config() {
  likegame::GameConfig cfg;
  cfg.k_dims = 2;
  cfg.horizon = 2;
  cfg.players.push_back(player("a", 1.0, {0.5, 0.5}, {item("ca", {0.4, 0.4}, "a")}));
  cfg.players.push_back(player("b", 1.0, {-0.5, -0.5}, {item("cb", {-0.4, -0.4}, "b")}));
  return cfg;
}

// Three uniform mixers with two pool items each; fresh content allowed, so
// runs exercise every action kind.
inline likegame::GameConfig mixer_config(std::uint64_t seed) {
  likegame::GameConfig cfg;
  cfg.k_dims = 2;
  cfg.horizon = 4;
  cfg.allow_new_content = true;
  cfg.rng_seed = seed;
  const double xs[3] = {-0.6, 0.0, 0.6};
  for (int i = 0; i < 3; ++i) {
    std::string id(1, static_cast<char>('a' + i));
    likegame::PlayerSpec p = player(id, 0.5, {xs[i], 0.2}, {});
    p.policy.kind = likegame::PolicyKind::UniformMixer;
    p.pool.push_back(item(id + "0", {xs[i], 0.1}, id));
    p.pool.push_back(item(id + "1", {xs[i], -0.3}, id));
    cfg.players.push_back(std::move(p));
  }
  return cfg;
}

struct ScratchDir {
  std::filesystem::path path;

  explicit ScratchDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("likegame_test_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace test_support
