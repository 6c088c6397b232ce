#include "likegame/io_json.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "likegame/errors.hpp"

namespace likegame::io {

namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

void check_keys(const ojson& obj, const std::string& where,
                std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (std::string_view a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) fail(where, "unknown key '" + key + "'");
  }
}

const ojson* find(const ojson& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double as_double(const ojson& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  return v.get<double>();
}

int as_int(const ojson& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<int>();
}

bool as_bool(const ojson& v, const std::string& where) {
  if (!v.is_boolean()) fail(where, "expected a boolean");
  return v.get<bool>();
}

std::string as_string(const ojson& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

Vec as_vec(const ojson& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of numbers");
  Vec out;
  out.reserve(v.size());
  for (const ojson& x : v) out.push_back(as_double(x, where));
  return out;
}

ojson vec_json(const Vec& v) { return ojson(v); }

ojson policy_json(const PolicySpec& p) {
  ojson j;
  j["kind"] = std::string(to_string(p.kind));
  switch (p.kind) {
    case PolicyKind::QuidProQuo:
      j["grim"] = p.grim;
      break;
    case PolicyKind::LevelK:
      j["depth"] = p.depth;
      break;
    case PolicyKind::InfluencerSeeker:
      j["target"] = p.target.value;
      break;
    case PolicyKind::InfluencerReposter:
      j["radius"] = p.radius;
      j["engage"] = std::string(to_string(p.engage));
      j["blind"] = p.blind;
      break;
    default:
      break;
  }
  return j;
}

PolicySpec parse_policy(const ojson& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const ojson* kind_v = find(j, "kind");
  if (!kind_v) fail(where, "missing 'kind'");
  std::string kind_name = as_string(*kind_v, where + ".kind");
  auto kind = policy_kind_from(kind_name);
  if (!kind) fail(where, "unknown policy kind '" + kind_name + "'");

  PolicySpec p;
  p.kind = *kind;
  switch (p.kind) {
    case PolicyKind::QuidProQuo:
      check_keys(j, where, {"kind", "grim"});
      if (const ojson* v = find(j, "grim")) p.grim = as_bool(*v, where + ".grim");
      break;
    case PolicyKind::LevelK:
      check_keys(j, where, {"kind", "depth"});
      if (const ojson* v = find(j, "depth")) p.depth = as_int(*v, where + ".depth");
      break;
    case PolicyKind::InfluencerSeeker:
      check_keys(j, where, {"kind", "target"});
      if (const ojson* v = find(j, "target"))
        p.target = PlayerId{as_string(*v, where + ".target")};
      break;
    case PolicyKind::InfluencerReposter: {
      check_keys(j, where, {"kind", "radius", "engage", "blind"});
      if (const ojson* v = find(j, "radius"))
        p.radius = as_double(*v, where + ".radius");
      if (const ojson* v = find(j, "engage")) {
        std::string name = as_string(*v, where + ".engage");
        auto engage = engage_kind_from(name);
        if (!engage) fail(where, "unknown engage kind '" + name + "'");
        p.engage = *engage;
      }
      if (const ojson* v = find(j, "blind")) p.blind = as_bool(*v, where + ".blind");
      break;
    }
    default:
      check_keys(j, where, {"kind"});
      break;
  }
  return p;
}

ojson belief_json(const BeliefState& b) {
  ojson j;
  if (b.majority_centroid_estimate)
    j["majority_centroid_estimate"] = vec_json(*b.majority_centroid_estimate);
  if (b.majority_centroid_of_centroid_estimate)
    j["majority_centroid_of_centroid_estimate"] =
        vec_json(*b.majority_centroid_of_centroid_estimate);
  if (!b.gamma_zero_type_prob.empty()) {
    ojson probs;
    for (const auto& [id, prob] : b.gamma_zero_type_prob) probs[id.value] = prob;
    j["gamma_zero_type_prob"] = std::move(probs);
  }
  return j;
}

BeliefState parse_belief(const ojson& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  check_keys(j, where,
             {"majority_centroid_estimate",
              "majority_centroid_of_centroid_estimate", "gamma_zero_type_prob"});
  BeliefState b;
  if (const ojson* v = find(j, "majority_centroid_estimate"))
    b.majority_centroid_estimate = as_vec(*v, where + ".majority_centroid_estimate");
  if (const ojson* v = find(j, "majority_centroid_of_centroid_estimate"))
    b.majority_centroid_of_centroid_estimate =
        as_vec(*v, where + ".majority_centroid_of_centroid_estimate");
  if (const ojson* v = find(j, "gamma_zero_type_prob")) {
    if (!v->is_object()) fail(where + ".gamma_zero_type_prob", "expected an object");
    for (const auto& [id, prob] : v->items())
      b.gamma_zero_type_prob[PlayerId{id}] =
          as_double(prob, where + ".gamma_zero_type_prob." + id);
  }
  return b;
}

ojson player_json(const PlayerSpec& p) {
  ojson j;
  j["id"] = p.id.value;
  j["gamma"] = p.gamma;
  j["ideal"] = vec_json(p.ideal);
  j["audience_multiplier"] = p.audience_multiplier;
  j["policy"] = policy_json(p.policy);
  if (!p.belief.empty()) j["belief"] = belief_json(p.belief);
  ojson pool = ojson::array();
  for (const ContentItem& c : p.pool) {
    ojson item;
    item["id"] = c.id.value;
    item["vector"] = vec_json(c.vector);
    pool.push_back(std::move(item));
  }
  j["pool"] = std::move(pool);
  return j;
}

PlayerSpec parse_player(const ojson& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  check_keys(j, where,
             {"id", "gamma", "ideal", "audience_multiplier", "policy", "belief",
              "pool"});
  PlayerSpec p;
  if (const ojson* v = find(j, "id")) p.id = PlayerId{as_string(*v, where + ".id")};
  else fail(where, "missing 'id'");
  if (const ojson* v = find(j, "gamma")) p.gamma = as_double(*v, where + ".gamma");
  if (const ojson* v = find(j, "ideal")) p.ideal = as_vec(*v, where + ".ideal");
  else fail(where, "missing 'ideal'");
  if (const ojson* v = find(j, "audience_multiplier"))
    p.audience_multiplier = as_double(*v, where + ".audience_multiplier");
  if (const ojson* v = find(j, "policy")) p.policy = parse_policy(*v, where + ".policy");
  if (const ojson* v = find(j, "belief")) p.belief = parse_belief(*v, where + ".belief");
  if (const ojson* v = find(j, "pool")) {
    if (!v->is_array()) fail(where + ".pool", "expected an array");
    int i = 0;
    for (const ojson& item : *v) {
      std::string item_where = where + ".pool[" + std::to_string(i++) + "]";
      if (!item.is_object()) fail(item_where, "expected an object");
      check_keys(item, item_where, {"id", "vector"});
      ContentItem c;
      if (const ojson* iv = find(item, "id"))
        c.id = ContentId{as_string(*iv, item_where + ".id")};
      else fail(item_where, "missing 'id'");
      if (const ojson* iv = find(item, "vector"))
        c.vector = as_vec(*iv, item_where + ".vector");
      else fail(item_where, "missing 'vector'");
      c.author = p.id;
      p.pool.push_back(std::move(c));
    }
  }
  return p;
}

ojson config_json(const GameConfig& c) {
  ojson j;
  j["schema"] = std::string(kConfigSchema);
  j["k_dims"] = c.k_dims;
  j["horizon"] = c.horizon;
  j["allow_new_content"] = c.allow_new_content;
  j["info_mode"] = c.info_mode == InfoMode::Perfect ? "perfect" : "imperfect";
  j["visibility_floor"] = c.visibility_floor;
  j["like_weight"] = c.like_weight;
  j["reshare_weight"] = c.reshare_weight;
  j["discount"] = c.discount;
  j["cheap_talk"] = c.cheap_talk;
  ojson centroids = ojson::array();
  for (const Vec& v : c.type_centroids) centroids.push_back(vec_json(v));
  j["type_centroids"] = std::move(centroids);
  j["alignment_radius"] = c.alignment_radius;
  j["personal_mode"] =
      c.personal_mode == PersonalUtilityMode::Static ? "static" : "exposure_weighted";
  j["rng_seed"] = c.rng_seed;
  ojson players = ojson::array();
  for (const PlayerSpec& p : c.players) players.push_back(player_json(p));
  j["players"] = std::move(players);
  return j;
}

GameConfig parse_config(const ojson& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  check_keys(j, where,
             {"schema", "k_dims", "horizon", "allow_new_content", "info_mode",
              "visibility_floor", "like_weight", "reshare_weight", "discount",
              "cheap_talk", "type_centroids", "alignment_radius",
              "personal_mode", "rng_seed", "players"});
  const ojson* schema = find(j, "schema");
  if (!schema) fail(where, "missing 'schema'");
  if (as_string(*schema, where + ".schema") != kConfigSchema)
    fail(where, "unsupported schema '" + as_string(*schema, where) + "'");

  GameConfig c;
  if (const ojson* v = find(j, "k_dims")) c.k_dims = as_int(*v, where + ".k_dims");
  if (const ojson* v = find(j, "horizon")) c.horizon = as_int(*v, where + ".horizon");
  if (const ojson* v = find(j, "allow_new_content"))
    c.allow_new_content = as_bool(*v, where + ".allow_new_content");
  if (const ojson* v = find(j, "info_mode")) {
    std::string mode = as_string(*v, where + ".info_mode");
    if (mode == "perfect") c.info_mode = InfoMode::Perfect;
    else if (mode == "imperfect") c.info_mode = InfoMode::Imperfect;
    else fail(where, "unknown info_mode '" + mode + "'");
  }
  if (const ojson* v = find(j, "visibility_floor"))
    c.visibility_floor = as_double(*v, where + ".visibility_floor");
  if (const ojson* v = find(j, "like_weight"))
    c.like_weight = as_double(*v, where + ".like_weight");
  if (const ojson* v = find(j, "reshare_weight"))
    c.reshare_weight = as_double(*v, where + ".reshare_weight");
  if (const ojson* v = find(j, "discount"))
    c.discount = as_double(*v, where + ".discount");
  if (const ojson* v = find(j, "cheap_talk"))
    c.cheap_talk = as_bool(*v, where + ".cheap_talk");
  if (const ojson* v = find(j, "type_centroids")) {
    if (!v->is_array()) fail(where + ".type_centroids", "expected an array");
    for (const ojson& centroid : *v)
      c.type_centroids.push_back(as_vec(centroid, where + ".type_centroids"));
  }
  if (const ojson* v = find(j, "alignment_radius"))
    c.alignment_radius = as_double(*v, where + ".alignment_radius");
  if (const ojson* v = find(j, "personal_mode")) {
    std::string mode = as_string(*v, where + ".personal_mode");
    if (mode == "static") c.personal_mode = PersonalUtilityMode::Static;
    else if (mode == "exposure_weighted")
      c.personal_mode = PersonalUtilityMode::ExposureWeighted;
    else fail(where, "unknown personal_mode '" + mode + "'");
  }
  if (const ojson* v = find(j, "rng_seed")) {
    if (!v->is_number_integer() && !v->is_number_unsigned())
      fail(where + ".rng_seed", "expected an integer");
    c.rng_seed = v->get<std::uint64_t>();
  }
  const ojson* players = find(j, "players");
  if (!players) fail(where, "missing 'players'");
  if (!players->is_array()) fail(where + ".players", "expected an array");
  int i = 0;
  for (const ojson& p : *players)
    c.players.push_back(
        parse_player(p, where + ".players[" + std::to_string(i++) + "]"));
  return c;
}

ojson action_json(const ActionRecord& a) {
  ojson j;
  j["round"] = a.round;
  j["actor"] = a.actor.value;
  j["kind"] = std::string(to_string(a.kind));
  if (a.content) j["content"] = a.content->value;
  if (a.source) j["source"] = a.source->value;
  return j;
}

ActionRecord parse_action(const ojson& j, const std::string& where) {
  check_keys(j, where, {"round", "actor", "kind", "content", "source"});
  ActionRecord a;
  if (const ojson* v = find(j, "round")) a.round = as_int(*v, where + ".round");
  if (const ojson* v = find(j, "actor")) a.actor = PlayerId{as_string(*v, where + ".actor")};
  if (const ojson* v = find(j, "kind")) {
    std::string name = as_string(*v, where + ".kind");
    auto kind = action_kind_from(name);
    if (!kind) fail(where, "unknown action kind '" + name + "'");
    a.kind = *kind;
  }
  if (const ojson* v = find(j, "content"))
    a.content = ContentId{as_string(*v, where + ".content")};
  if (const ojson* v = find(j, "source"))
    a.source = PlayerId{as_string(*v, where + ".source")};
  return a;
}

ojson round_json(const RoundRecord& r) {
  ojson j;
  j["round"] = r.round;
  ojson visible;
  for (const auto& [viewer, pairs] : r.visible) {
    ojson list = ojson::array();
    for (const SharePair& p : pairs) {
      ojson pair;
      pair["content"] = p.content.value;
      pair["sharer"] = p.sharer.value;
      list.push_back(std::move(pair));
    }
    visible[viewer.value] = std::move(list);
  }
  j["visible"] = std::move(visible);
  ojson actions = ojson::array();
  for (const ActionRecord& a : r.actions) actions.push_back(action_json(a));
  j["actions"] = std::move(actions);
  ojson utilities;
  for (const auto& [id, u] : r.utilities) {
    ojson breakdown;
    breakdown["personal"] = u.personal;
    breakdown["social"] = u.social;
    breakdown["combined"] = u.combined;
    utilities[id.value] = std::move(breakdown);
  }
  j["utilities"] = std::move(utilities);
  j["annotations"] = ojson(r.annotations);
  return j;
}

RoundRecord parse_round(const ojson& j, const std::string& where) {
  check_keys(j, where, {"round", "visible", "actions", "utilities", "annotations"});
  RoundRecord r;
  if (const ojson* v = find(j, "round")) r.round = as_int(*v, where + ".round");
  if (const ojson* v = find(j, "visible")) {
    for (const auto& [viewer, list] : v->items()) {
      std::set<SharePair>& pairs = r.visible[PlayerId{viewer}];
      for (const ojson& pair : list) {
        check_keys(pair, where + ".visible", {"content", "sharer"});
        pairs.insert(SharePair{
            ContentId{as_string(pair.at("content"), where + ".visible")},
            PlayerId{as_string(pair.at("sharer"), where + ".visible")}});
      }
    }
  }
  if (const ojson* v = find(j, "actions")) {
    int i = 0;
    for (const ojson& a : *v)
      r.actions.push_back(
          parse_action(a, where + ".actions[" + std::to_string(i++) + "]"));
  }
  if (const ojson* v = find(j, "utilities")) {
    for (const auto& [id, u] : v->items()) {
      UtilityBreakdown b;
      b.personal = as_double(u.at("personal"), where + ".utilities");
      b.social = as_double(u.at("social"), where + ".utilities");
      b.combined = as_double(u.at("combined"), where + ".utilities");
      r.utilities[PlayerId{id}] = b;
    }
  }
  if (const ojson* v = find(j, "annotations"))
    for (const ojson& note : *v)
      r.annotations.push_back(as_string(note, where + ".annotations"));
  return r;
}

ojson cheap_talk_json(const CheapTalkRecord& ct) {
  ojson j;
  ojson displays;
  for (const auto& [id, d] : ct.displays) {
    ojson display;
    display["content"] = d.content.value;
    display["vector"] = vec_json(d.vector);
    displays[id.value] = std::move(display);
  }
  j["displays"] = std::move(displays);
  ojson beliefs;
  for (const auto& [id, b] : ct.beliefs) beliefs[id.value] = belief_json(b);
  j["beliefs"] = std::move(beliefs);
  return j;
}

CheapTalkRecord parse_cheap_talk(const ojson& j, const std::string& where) {
  check_keys(j, where, {"displays", "beliefs"});
  CheapTalkRecord ct;
  if (const ojson* v = find(j, "displays")) {
    for (const auto& [id, d] : v->items()) {
      check_keys(d, where + ".displays", {"content", "vector"});
      CheapTalkRecord::Display display;
      display.content = ContentId{as_string(d.at("content"), where + ".displays")};
      display.vector = as_vec(d.at("vector"), where + ".displays");
      ct.displays[PlayerId{id}] = std::move(display);
    }
  }
  if (const ojson* v = find(j, "beliefs"))
    for (const auto& [id, b] : v->items())
      ct.beliefs[PlayerId{id}] = parse_belief(b, where + ".beliefs." + id);
  return ct;
}

ojson metrics_json(const MetricsBlock& m) {
  ojson j;
  ojson rounds = ojson::array();
  for (const MetricsRow& row : m.rounds) {
    ojson r;
    r["round"] = row.round;
    r["fci"] = ojson(row.fci);
    r["reshare_entropy"] = row.reshare_entropy;
    r["engagement_concentration"] = row.engagement_concentration;
    ojson alignment, dissent, defined;
    for (const auto& [id, x] : row.exposure_alignment) alignment[id.value] = x;
    for (const auto& [id, x] : row.dissent_exposure) dissent[id.value] = x;
    for (const auto& [id, x] : row.exposure_defined) defined[id.value] = x;
    r["exposure_alignment"] = std::move(alignment);
    r["dissent_exposure"] = std::move(dissent);
    r["exposure_defined"] = std::move(defined);
    rounds.push_back(std::move(r));
  }
  j["rounds"] = std::move(rounds);
  ojson amplification;
  for (const auto& [id, curve] : m.amplification)
    amplification[id.value] = ojson(curve);
  j["amplification"] = std::move(amplification);
  return j;
}

MetricsBlock parse_metrics(const ojson& j, const std::string& where) {
  check_keys(j, where, {"rounds", "amplification"});
  MetricsBlock m;
  if (const ojson* v = find(j, "rounds")) {
    for (const ojson& r : *v) {
      check_keys(r, where + ".rounds",
                 {"round", "fci", "reshare_entropy", "engagement_concentration",
                  "exposure_alignment", "dissent_exposure", "exposure_defined"});
      MetricsRow row;
      row.round = as_int(r.at("round"), where + ".rounds");
      for (const ojson& x : r.at("fci"))
        row.fci.push_back(as_double(x, where + ".rounds"));
      row.reshare_entropy = as_double(r.at("reshare_entropy"), where + ".rounds");
      row.engagement_concentration =
          as_double(r.at("engagement_concentration"), where + ".rounds");
      for (const auto& [id, x] : r.at("exposure_alignment").items())
        row.exposure_alignment[PlayerId{id}] = as_double(x, where + ".rounds");
      for (const auto& [id, x] : r.at("dissent_exposure").items())
        row.dissent_exposure[PlayerId{id}] = as_double(x, where + ".rounds");
      for (const auto& [id, x] : r.at("exposure_defined").items())
        row.exposure_defined[PlayerId{id}] = as_bool(x, where + ".rounds");
      m.rounds.push_back(std::move(row));
    }
  }
  if (const ojson* v = find(j, "amplification")) {
    for (const auto& [id, curve] : v->items()) {
      std::vector<double>& out = m.amplification[ContentId{id}];
      for (const ojson& x : curve) out.push_back(as_double(x, where + ".amplification"));
    }
  }
  return m;
}

ojson parse_line(const std::string& line, int line_no) {
  try {
    return ojson::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("trace line " + std::to_string(line_no) + ": " + e.what());
  }
}

}  // namespace

std::string config_to_json_text(const GameConfig& config) {
  return config_json(config).dump(2) + "\n";
}

GameConfig config_from_json_text(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(j, "config");
}

GameConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json_text(buf.str());
}

void save_config(const GameConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << config_to_json_text(config);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void write_trace(const RunTrace& trace, std::ostream& out) {
  ojson meta;
  meta["schema"] = std::string(kTraceSchema);
  meta["seed"] = trace.seed;
  meta["config"] = config_json(trace.config);
  out << meta.dump() << '\n';
  if (trace.cheap_talk) {
    ojson line;
    line["cheap_talk"] = cheap_talk_json(*trace.cheap_talk);
    out << line.dump() << '\n';
  }
  for (const RoundRecord& r : trace.rounds) out << round_json(r).dump() << '\n';
  ojson metrics;
  metrics["metrics"] = metrics_json(trace.metrics);
  out << metrics.dump() << '\n';
}

void write_trace_file(const RunTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_trace(trace, out);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

RunTrace read_trace_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  RunTrace trace;
  std::string line;
  int line_no = 0;
  bool saw_meta = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ojson j = parse_line(line, line_no);
    std::string where = "trace line " + std::to_string(line_no);
    if (!saw_meta) {
      check_keys(j, where, {"schema", "seed", "config"});
      const ojson* schema = find(j, "schema");
      if (!schema || as_string(*schema, where) != kTraceSchema)
        throw IoError(where + ": expected schema '" + std::string(kTraceSchema) + "'");
      trace.seed = j.at("seed").get<std::uint64_t>();
      trace.config = parse_config(j.at("config"), where + ".config");
      saw_meta = true;
    } else if (const ojson* v = find(j, "cheap_talk")) {
      trace.cheap_talk = parse_cheap_talk(*v, where);
    } else if (find(j, "metrics")) {
      trace.metrics = parse_metrics(j.at("metrics"), where);
    } else if (find(j, "round")) {
      trace.rounds.push_back(parse_round(j, where));
    } else {
      throw IoError(where + ": unrecognized trace line");
    }
  }
  if (!saw_meta) throw IoError("'" + path.string() + "' has no trace meta line");
  return trace;
}

std::string summary_json_text(const RunTrace& trace) {
  ojson j;
  j["schema"] = std::string(kSummarySchema);
  j["seed"] = trace.seed;
  j["players"] = trace.config.n_players();
  j["horizon"] = trace.config.horizon;
  std::map<ActionKind, int> counts;
  for (const RoundRecord& r : trace.rounds)
    for (const ActionRecord& a : r.actions) counts[a.kind] += 1;
  ojson actions;
  for (ActionKind kind : {ActionKind::Noop, ActionKind::Like, ActionKind::Reshare,
                          ActionKind::Share})
    actions[std::string(to_string(kind))] = counts[kind];
  j["actions"] = std::move(actions);
  if (!trace.rounds.empty()) {
    ojson final_utilities;
    for (const auto& [id, u] : trace.rounds.back().utilities) {
      ojson breakdown;
      breakdown["personal"] = u.personal;
      breakdown["social"] = u.social;
      breakdown["combined"] = u.combined;
      final_utilities[id.value] = std::move(breakdown);
    }
    j["final_utilities"] = std::move(final_utilities);
  }
  if (!trace.metrics.rounds.empty()) {
    const MetricsRow& last = trace.metrics.rounds.back();
    ojson final_metrics;
    final_metrics["round"] = last.round;
    final_metrics["fci"] = ojson(last.fci);
    final_metrics["reshare_entropy"] = last.reshare_entropy;
    final_metrics["engagement_concentration"] = last.engagement_concentration;
    j["final_metrics"] = std::move(final_metrics);
  }
  ojson totals;
  for (const auto& [id, curve] : trace.metrics.amplification)
    totals[id.value] = curve.empty() ? 0.0 : curve.back();
  j["total_engagement"] = std::move(totals);
  return j.dump(2) + "\n";
}

void write_summary_file(const RunTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << summary_json_text(trace);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace likegame::io
