#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "sdual/betaconf.hpp"
#include "sdual/casimir.hpp"
#include "sdual/dioph.hpp"
#include "sdual/errors.hpp"
#include "sdual/knownz.hpp"
#include "sdual/markovmut.hpp"
#include "sdual/surface.hpp"

namespace sdual {

namespace {

using nlohmann::json;

enum class Format { human, json, tsv };

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

long long parse_ll(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(text, &pos);
    require(pos == text.size(), what + ": trailing characters in '" + text + "'");
    return v;
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError(what + ": '" + text + "' is not an integer");
  }
}

std::vector<long long> parse_ll_list(const std::string& text, const std::string& what) {
  std::vector<long long> vals;
  for (const std::string& part : split(text, ',')) vals.push_back(parse_ll(part, what));
  return vals;
}

std::string ks_string(const HighestWeight& hw) {
  std::vector<std::string> parts;
  for (Eigen::Index i = 0; i < hw.ks().size(); ++i) parts.push_back(hw.ks()(i).str());
  return join(parts, ",");
}

std::string intvec_string(const IntVec& v) {
  std::vector<std::string> parts;
  for (Eigen::Index i = 0; i < v.size(); ++i) parts.push_back(v(i).str());
  return join(parts, ",");
}

std::string ratvec_string(const RatVec& v) {
  std::vector<std::string> parts;
  for (Eigen::Index i = 0; i < v.size(); ++i) parts.push_back(rat_string(v(i)));
  return join(parts, ",");
}

json intvec_json(const IntVec& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i).str());
  return arr;
}

void render_human(std::ostream& out, const Fields& fields, const Table* table) {
  std::size_t keyw = 0;
  for (const auto& [k, v] : fields) keyw = std::max(keyw, k.size());
  for (const auto& [k, v] : fields)
    out << k << std::string(keyw - k.size(), ' ') << "  " << v << "\n";
  if (table == nullptr) return;
  if (!fields.empty()) out << "\n";
  std::vector<std::size_t> w(table->headers.size());
  for (std::size_t c = 0; c < table->headers.size(); ++c) w[c] = table->headers[c].size();
  for (const auto& row : table->rows)
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
  const auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(w[c] - row[c].size() + 2, ' ');
    }
    out << "\n";
  };
  emit_row(table->headers);
  std::size_t total = 0;
  for (std::size_t c = 0; c < w.size(); ++c) total += w[c] + (c + 1 < w.size() ? 2 : 0);
  out << std::string(total, '-') << "\n";
  for (const auto& row : table->rows) emit_row(row);
}

void render_tsv(std::ostream& out, const Table& table) {
  out << join(table.headers, "\t") << "\n";
  for (const auto& row : table.rows) out << join(row, "\t") << "\n";
}

void emit(std::ostream& out, Format fmt, const Fields& fields, const Table* table,
          const json& doc) {
  switch (fmt) {
    case Format::human:
      render_human(out, fields, table);
      break;
    case Format::json:
      out << doc.dump(2) << "\n";
      break;
    case Format::tsv: {
      if (table != nullptr) {
        render_tsv(out, *table);
      } else {
        Table t;
        std::vector<std::string> row;
        for (const auto& [k, v] : fields) {
          t.headers.push_back(k);
          row.push_back(v);
        }
        t.rows.push_back(std::move(row));
        render_tsv(out, t);
      }
      break;
    }
  }
}

json envelope(const std::string& command) {
  json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  return doc;
}

std::string rep_label(const HighestWeight& hw) {
  if (auto name = rep_name(hw)) return *name;
  return "hw:" + ks_string(hw);
}

SurfaceModel surface_from_flags(const std::string& name, long long m, bool m_given) {
  if (name == "p2" || name == "P2") return SurfaceModel::p2();
  if (name == "quadric" || name == "p1xp1" || name == "P1xP1") return SurfaceModel::quadric();
  if (name == "xm" || name == "Xm") {
    require(m_given, "surface xm needs --m (number of blown-up points, 1..8)");
    require(m >= 1 && m <= 8, "--m must lie in 1..8");
    return SurfaceModel::blown_plane(static_cast<int>(m));
  }
  if (name.size() == 2 && (name[0] == 'x' || name[0] == 'X') && name[1] >= '1' && name[1] <= '8')
    return SurfaceModel::blown_plane(name[1] - '0');
  throw DomainError("unknown surface '" + name + "' (use p2, quadric, xm with --m, or x1..x8)");
}

long long multiplicity_cap(long long flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("SDUAL_MULT_CAP")) {
    const long long v = parse_ll(env, "SDUAL_MULT_CAP");
    require(v >= 1, "SDUAL_MULT_CAP must be positive");
    return v;
  }
  return kDefaultMultiplicityCap;
}

// ---------------------------------------------------------------- casimir

struct CasimirArgs {
  long long rank = 0;
  std::string hw_text;
  std::string rep_text;
  bool oracle = false;
  bool weights = false;
  long long mult_cap = 0;
  bool mult_cap_given = false;
};

void run_casimir(const CasimirArgs& a, Format fmt, std::ostream& out) {
  require(a.rank >= 2, "--rank must be at least 2");
  require(a.hw_text.empty() != a.rep_text.empty(),
          "give exactly one of --hw (coefficient list) or --rep (name)");

  std::optional<NamedRep> named;
  HighestWeight hw = [&] {
    if (!a.rep_text.empty()) {
      named = parse_named_rep(a.rep_text, static_cast<Eigen::Index>(a.rank));
      return resolve(*named);
    }
    return HighestWeight(static_cast<Eigen::Index>(a.rank),
                         parse_ll_list(a.hw_text, "--hw"));
  }();

  const std::optional<std::string> name = rep_name(hw);
  if (!named && name) named = parse_named_rep(*name, hw.rank());

  const Int dim = dim_weyl(hw);
  const Rat pairing_v = casimir_pairing(hw);
  const Rat c2_v = c2(hw);
  std::optional<Rat> closed;
  if (named) closed = c2_closed_form(*named);

  const long long cap = multiplicity_cap(a.mult_cap, a.mult_cap_given);
  std::optional<Rat> oracle_v;
  if (a.oracle) oracle_v = c2_trace_oracle(hw, cap);

  Fields fields{{"rank", std::to_string(a.rank)},
                {"highest_weight", ks_string(hw)},
                {"name", name.value_or("-")},
                {"dim", dim.str()},
                {"casimir_pairing", rat_string(pairing_v)},
                {"c2", rat_string(c2_v)}};
  if (closed) fields.push_back({"c2_closed_form", rat_string(*closed)});
  if (oracle_v) fields.push_back({"c2_trace_oracle", rat_string(*oracle_v)});

  json doc = envelope("casimir");
  doc["rank"] = a.rank;
  {
    json arr = json::array();
    for (Eigen::Index i = 0; i < hw.ks().size(); ++i) arr.push_back(hw.ks()(i).str());
    doc["highest_weight"] = arr;
  }
  doc["name"] = name ? json(*name) : json(nullptr);
  doc["dim"] = dim.str();
  doc["casimir_pairing"] = rat_string(pairing_v);
  doc["c2"] = rat_string(c2_v);
  if (closed) doc["c2_closed_form"] = rat_string(*closed);
  if (oracle_v) doc["c2_trace_oracle"] = rat_string(*oracle_v);

  std::optional<Table> table;
  if (a.weights) {
    const WeightSystem ws = weight_multiplicities(hw, cap);
    table.emplace();
    table->headers = {"weight", "multiplicity"};
    json arr = json::array();
    for (const auto& [w, m] : ws.entries()) {
      table->rows.push_back({ratvec_string(w), m.str()});
      json entry;
      entry["weight"] = json::array();
      for (Eigen::Index i = 0; i < w.size(); ++i) entry["weight"].push_back(rat_string(w(i)));
      entry["multiplicity"] = m.str();
      arr.push_back(std::move(entry));
    }
    doc["weights"] = std::move(arr);
    doc["weight_total"] = ws.total().str();
  }

  emit(out, fmt, fields, table ? &*table : nullptr, doc);
}

// ---------------------------------------------------------------- beta-enum

void run_beta_enum(long long rank, bool fold_duals, Format fmt, std::ostream& out) {
  require(rank >= 2, "--rank must be at least 2");
  const auto configs = enumerate_configs(static_cast<Eigen::Index>(rank), fold_duals);

  Table table;
  table.headers = {"beta", "reps"};
  json arr = json::array();
  for (const FieldConfiguration& cfg : configs) {
    // group equal reps for a compact label
    std::vector<std::string> groups;
    json jreps = json::array();
    std::size_t i = 0;
    while (i < cfg.reps.size()) {
      std::size_t j = i;
      while (j < cfg.reps.size() && cfg.reps[j] == cfg.reps[i]) ++j;
      const std::size_t count = j - i;
      const std::string label = rep_label(cfg.reps[i]);
      groups.push_back(count > 1 ? label + " x" + std::to_string(count) : label);
      json g;
      g["name"] = label;
      g["ks"] = json::array();
      for (Eigen::Index t = 0; t < cfg.reps[i].ks().size(); ++t)
        g["ks"].push_back(cfg.reps[i].ks()(t).str());
      g["count"] = count;
      jreps.push_back(std::move(g));
      i = j;
    }
    const std::string label = join(groups, " + ");
    table.rows.push_back({rat_string(cfg.beta), label});
    json jc;
    jc["beta"] = rat_string(cfg.beta);
    jc["label"] = label;
    jc["reps"] = std::move(jreps);
    arr.push_back(std::move(jc));
  }

  Fields fields{{"rank", std::to_string(rank)},
                {"fold_duals", bool_str(fold_duals)},
                {"count", std::to_string(configs.size())}};
  json doc = envelope("beta-enum");
  doc["rank"] = rank;
  doc["fold_duals"] = fold_duals;
  doc["count"] = configs.size();
  doc["configurations"] = std::move(arr);

  emit(out, fmt, fields, &table, doc);
}

// ---------------------------------------------------------------- markov

void run_markov(const std::string& max_text, const std::string& mutate_text, long long slot,
                bool slot_given, Format fmt, std::ostream& out) {
  require(max_text.empty() != mutate_text.empty(),
          "give exactly one of --max (enumerate) or --mutate x,y,z (single step)");

  if (!mutate_text.empty()) {
    require(slot_given, "--mutate needs --slot 0|1|2");
    require(slot >= 0 && slot <= 2, "--slot must be 0, 1 or 2");
    const auto vals = parse_ll_list(mutate_text, "--mutate");
    require(vals.size() == 3, "--mutate needs exactly three values x,y,z");
    const MarkovTriple t{Int(vals[0]), Int(vals[1]), Int(vals[2])};
    const MarkovTriple r = mutate(t, static_cast<Slot>(slot));
    const MarkovTriple c = canonical(r);

    Fields fields{{"input", t.x.str() + "," + t.y.str() + "," + t.z.str()},
                  {"slot", std::to_string(slot)},
                  {"result", r.x.str() + "," + r.y.str() + "," + r.z.str()},
                  {"canonical", c.x.str() + "," + c.y.str() + "," + c.z.str()}};
    json doc = envelope("markov");
    doc["input"] = json::array({t.x.str(), t.y.str(), t.z.str()});
    doc["slot"] = slot;
    doc["result"] = json::array({r.x.str(), r.y.str(), r.z.str()});
    doc["canonical"] = json::array({c.x.str(), c.y.str(), c.z.str()});
    emit(out, fmt, fields, nullptr, doc);
    return;
  }

  const Int max_value(max_text);
  const auto triples = enumerate_triples(max_value);
  Table table;
  table.headers = {"x", "y", "z"};
  json arr = json::array();
  for (const MarkovTriple& t : triples) {
    table.rows.push_back({t.x.str(), t.y.str(), t.z.str()});
    arr.push_back(json::array({t.x.str(), t.y.str(), t.z.str()}));
  }
  Fields fields{{"max", max_value.str()}, {"count", std::to_string(triples.size())}};
  json doc = envelope("markov");
  doc["max"] = max_value.str();
  doc["count"] = triples.size();
  doc["triples"] = std::move(arr);
  emit(out, fmt, fields, &table, doc);
}

// ---------------------------------------------------------------- exceptional

void run_exceptional(long long from, long long to, bool check_mutations, Format fmt,
                     std::ostream& out) {
  require(from <= to, "--from must not exceed --to");
  const auto seq = exceptional_sequence(from, to);

  Table table;
  table.headers = {"n", "rank", "c1", "c2"};
  if (check_mutations) {
    table.headers.push_back("h");
    table.headers.push_back("mutation_ok");
  }
  json arr = json::array();
  for (const ExceptionalDatum& e : seq) {
    std::vector<std::string> row{std::to_string(e.n), e.rank.str(), e.c1.str(), e.c2.str()};
    json je;
    je["n"] = e.n;
    je["rank"] = e.rank.str();
    je["c1"] = e.c1.str();
    je["c2"] = e.c2.str();
    if (check_mutations) {
      const MutationTripleReport rep = verify_mutation_triple(e.n);
      row.push_back(rep.h.str());
      row.push_back(bool_str(rep.pass));
      je["h"] = rep.h.str();
      je["mutation_ok"] = rep.pass;
    }
    table.rows.push_back(std::move(row));
    arr.push_back(std::move(je));
  }

  Fields fields{{"from", std::to_string(from)},
                {"to", std::to_string(to)},
                {"count", std::to_string(seq.size())}};
  json doc = envelope("exceptional");
  doc["from"] = from;
  doc["to"] = to;
  doc["count"] = seq.size();
  doc["terms"] = std::move(arr);
  emit(out, fmt, fields, &table, doc);
}

// ---------------------------------------------------------------- moduli-dim

void run_moduli_dim(const std::string& surface_name, long long m, bool m_given, long long rank,
                    const std::string& c1_text, long long k, Format fmt, std::ostream& out) {
  const SurfaceModel s = surface_from_flags(surface_name, m, m_given);
  const auto coords = parse_ll_list(c1_text, "--c1");
  const DivisorClass c1 = s.divisor(coords);
  require(rank >= 1, "--rank must be positive");
  const ModuliSpec spec = ModuliSpec::make(Int(rank), c1, Int(k));
  const ObstructionReport obs = obstruction_rank_check(spec);

  Fields fields{{"surface", s.name()},
                {"r", spec.r.str()},
                {"c1", intvec_string(c1.coords())},
                {"k", spec.k.str()},
                {"mu", rat_string(spec.mu)},
                {"h1", spec.h1.str()},
                {"moduli_dim", spec.dim_m.str()},
                {"sym2_h1", spec.sym2.str()},
                {"lam2_h1", spec.lam2.str()},
                {"two_r_h1", obs.rhs.str()},
                {"dim_matches_2r_h1", bool_str(obs.pass)},
                {"k_independent", bool_str(obs.k_independent)},
                {"window_b", bool_str(spec.window_b)},
                {"window_c", bool_str(spec.window_c)},
                {"cond_b", bool_str(spec.cond_b)},
                {"cond_c", bool_str(spec.cond_c)},
                {"smooth", bool_str(spec.smooth)}};

  json doc = envelope("moduli-dim");
  doc["surface"] = s.name();
  doc["r"] = spec.r.str();
  doc["c1"] = intvec_json(c1.coords());
  doc["k"] = spec.k.str();
  doc["mu"] = rat_string(spec.mu);
  doc["h1"] = spec.h1.str();
  doc["moduli_dim"] = spec.dim_m.str();
  doc["sym2_h1"] = spec.sym2.str();
  doc["lam2_h1"] = spec.lam2.str();
  doc["two_r_h1"] = obs.rhs.str();
  doc["dim_matches_2r_h1"] = obs.pass;
  doc["k_independent"] = obs.k_independent;
  doc["window_b"] = spec.window_b;
  doc["window_c"] = spec.window_c;
  doc["cond_b"] = spec.cond_b;
  doc["cond_c"] = spec.cond_c;
  doc["smooth"] = spec.smooth;

  emit(out, fmt, fields, nullptr, doc);
}

// ---------------------------------------------------------------- search-b

void run_search_b(const std::string& surface_name, long long m, bool m_given,
                  const std::string& condition, long long r_min, long long r_max,
                  const std::string& bounds_text, long long c1_bound, bool c1_bound_given,
                  Format fmt, std::ostream& out) {
  const SurfaceModel s = surface_from_flags(surface_name, m, m_given);
  require(condition == "b" || condition == "c", "--condition must be b or c");

  SearchWindow w;
  w.r_min = r_min;
  w.r_max = r_max;
  if (!bounds_text.empty()) {
    require(!c1_bound_given, "give at most one of --coord-bounds and --c1-bound");
    for (const std::string& part : split(bounds_text, ',')) {
      const auto lh = split(part, ':');
      require(lh.size() == 2, "--coord-bounds expects lo:hi,lo:hi,...");
      w.coord_ranges.push_back({parse_ll(lh[0], "--coord-bounds"),
                                parse_ll(lh[1], "--coord-bounds")});
    }
  } else if (c1_bound_given) {
    require(c1_bound >= 0, "--c1-bound must be nonnegative");
    w.coord_ranges.assign(static_cast<std::size_t>(s.picard_rank()), {-c1_bound, c1_bound});
  }

  const auto hits =
      condition == "b" ? search_condition_b(s, w) : search_condition_c(s, w);

  Table table;
  table.headers = {"r", "c1", "mu", "window_b", "window_c", "smooth"};
  json arr = json::array();
  for (const ConditionHit& h : hits) {
    table.rows.push_back({h.r.str(), intvec_string(h.c1.coords()), rat_string(h.mu),
                          bool_str(h.window_b), bool_str(h.window_c), bool_str(h.smooth)});
    json jh;
    jh["r"] = h.r.str();
    jh["c1"] = intvec_json(h.c1.coords());
    jh["mu"] = rat_string(h.mu);
    jh["window_b"] = h.window_b;
    jh["window_c"] = h.window_c;
    jh["smooth"] = h.smooth;
    arr.push_back(std::move(jh));
  }

  Fields fields{{"surface", s.name()},
                {"condition", condition},
                {"r_min", std::to_string(r_min)},
                {"r_max", std::to_string(r_max)},
                {"count", std::to_string(hits.size())}};
  json doc = envelope("search-b");
  doc["surface"] = s.name();
  doc["condition"] = condition;
  doc["r_min"] = r_min;
  doc["r_max"] = r_max;
  {
    json ranges = json::array();
    SearchWindow effective = w;
    if (effective.coord_ranges.empty())
      effective.coord_ranges.assign(static_cast<std::size_t>(s.picard_rank()),
                                    {-3 * w.r_max, 3 * w.r_max});
    for (const auto& [lo, hi] : effective.coord_ranges)
      ranges.push_back(json::array({lo, hi}));
    doc["coord_ranges"] = std::move(ranges);
  }
  doc["count"] = hits.size();
  doc["hits"] = std::move(arr);
  emit(out, fmt, fields, &table, doc);
}

// ---------------------------------------------------------------- search-sys

void run_search_sys(long long m_min, long long m_max, long long r_min, long long r_max,
                    bool pruning, Format fmt, std::ostream& out) {
  const auto sols = search_sys(m_min, m_max, r_min, r_max, pruning);

  Table table;
  table.headers = {"m", "r", "A", "a", "b", "orderings"};
  json arr = json::array();
  for (const SysSolution& s : sols) {
    std::vector<std::string> bs;
    json jb = json::array();
    for (const Int& v : s.b) {
      bs.push_back(v.str());
      jb.push_back(v.str());
    }
    table.rows.push_back(
        {std::to_string(s.m), s.r.str(), s.A.str(), s.a.str(), join(bs, ","),
         s.vector_count.str()});
    json js;
    js["m"] = s.m;
    js["r"] = s.r.str();
    js["A"] = s.A.str();
    js["a"] = s.a.str();
    js["b"] = std::move(jb);
    js["orderings"] = s.vector_count.str();
    arr.push_back(std::move(js));
  }

  Fields fields{{"m_min", std::to_string(m_min)}, {"m_max", std::to_string(m_max)},
                {"r_min", std::to_string(r_min)}, {"r_max", std::to_string(r_max)},
                {"interval_pruning", bool_str(pruning)},
                {"count", std::to_string(sols.size())}};
  json doc = envelope("search-sys");
  doc["m_min"] = m_min;
  doc["m_max"] = m_max;
  doc["r_min"] = r_min;
  doc["r_max"] = r_max;
  doc["interval_pruning"] = pruning;
  doc["count"] = sols.size();
  doc["solutions"] = std::move(arr);
  emit(out, fmt, fields, &table, doc);
}

// ---------------------------------------------------------------- interval

void run_interval(long long r, long long A, Format fmt, std::ostream& out) {
  const IntervalReport rep = interval_argument(Int(r), Int(A));

  std::vector<std::string> ints;
  json jints = json::array();
  for (int mm : rep.integer_ms) {
    ints.push_back(std::to_string(mm));
    jints.push_back(mm);
  }

  Fields fields{{"r", rep.r.str()},
                {"A", rep.A.str()},
                {"left", rat_string(rep.left)},
                {"right", rat_string(rep.right)},
                {"length", rat_string(rep.length)},
                {"length_bound", rat_string(rep.length_bound)},
                {"bound_ok", bool_str(rep.bound_ok)},
                {"integers", ints.empty() ? "-" : join(ints, ",")},
                {"contains_integer", bool_str(rep.contains_integer)}};
  json doc = envelope("interval");
  doc["r"] = rep.r.str();
  doc["A"] = rep.A.str();
  doc["left"] = rat_string(rep.left);
  doc["right"] = rat_string(rep.right);
  doc["length"] = rat_string(rep.length);
  doc["length_bound"] = rat_string(rep.length_bound);
  doc["bound_ok"] = rep.bound_ok;
  doc["integers"] = std::move(jints);
  doc["contains_integer"] = rep.contains_integer;
  emit(out, fmt, fields, nullptr, doc);
}

// ---------------------------------------------------------------- known-z

void run_known_z(long long series, bool series_given, Format fmt, std::ostream& out) {
  std::vector<ZSeries> selected;
  if (series_given) {
    selected.push_back(known_z_series(static_cast<int>(series)));
  } else {
    selected = known_z_table();
  }

  Table table;
  table.headers = {"series", "power", "coefficient", "provenance"};
  json arr = json::array();
  Fields fields;
  for (const ZSeries& zs : selected) {
    fields.push_back({zs.label, zs.note});
    json js;
    js["index"] = zs.index;
    js["label"] = zs.label;
    js["note"] = zs.note;
    js["coefficients"] = json::array();
    for (const ZCoefficient& c : zs.coefficients) {
      table.rows.push_back(
          {zs.label, std::to_string(c.power), c.coefficient.str(), c.provenance});
      json jc;
      jc["power"] = c.power;
      jc["coefficient"] = c.coefficient.str();
      jc["provenance"] = c.provenance;
      js["coefficients"].push_back(std::move(jc));
    }
    arr.push_back(std::move(js));
  }

  json doc = envelope("known-z");
  doc["series"] = std::move(arr);
  emit(out, fmt, fields, &table, doc);
}

// ---------------------------------------------------------------- selftest

void run_selftest(std::ostream& out) {
  struct Check {
    const char* name;
    std::function<void()> fn;
  };
  const auto check = [](bool ok, const std::string& msg) {
    internal_check(ok, msg);
  };

  const std::vector<Check> checks = {
      {"casimir closed forms, r <= 10",
       [&] {
         for (long long r = 2; r <= 10; ++r) {
           for (long long k = 1; k <= std::min<long long>(r, 5); ++k) {
             if (k <= r - 1) {
               const NamedRep nr{RepKind::ext, static_cast<Eigen::Index>(r), Int(k)};
               check(c2_closed_form(nr) == c2(resolve(nr)), "ext closed form");
             }
             const NamedRep ns{RepKind::sym, static_cast<Eigen::Index>(r), Int(k)};
             check(c2_closed_form(ns) == c2(resolve(ns)), "sym closed form");
           }
           const NamedRep na{RepKind::ad, static_cast<Eigen::Index>(r), 0};
           check(c2_closed_form(na) == Rat(2 * r), "ad closed form");
           check(c2(resolve(na)) == Rat(2 * r), "ad resolved c2");
         }
       }},
      {"trace oracle spot checks",
       [&] {
         for (const auto& hw :
              {resolve({RepKind::sym, 2, 5}), resolve({RepKind::ad, 3, 0}),
               HighestWeight(4, std::vector<long long>{1, 0, 1})})
           check(c2_trace_oracle(hw) == c2(hw), "trace oracle equals algebraic c2");
       }},
      {"series identities, r <= 40",
       [&] {
         for (long long r = 2; r <= 40; ++r) check(verify_series(r).pass, "series");
       }},
      {"beta-enum counts, rank 2 and 3",
       [&] {
         const auto c2s = enumerate_configs(2);
         const auto c3s = enumerate_configs(3);
         long long z2 = 0, z3 = 0;
         for (const auto& c : c2s) z2 += c.beta == 0;
         for (const auto& c : c3s) z3 += c.beta == 0;
         check(c2s.size() == 5 && z2 == 2, "rank 2 counts");
         check(c3s.size() == 34 && z3 == 12, "rank 3 counts");
       }},
      {"markov triples <= 100 vs brute force",
       [&] {
         const auto got = enumerate_triples(100);
         std::vector<std::array<long long, 3>> want;
         for (long long x = 1; x <= 100; ++x)
           for (long long y = 1; y <= x; ++y)
             for (long long z = 1; z <= y; ++z)
               if (x * x + y * y + z * z == 3 * x * y * z) want.push_back({x, y, z});
         check(got.size() == want.size(), "triple count");
         for (std::size_t i = 0; i < want.size(); ++i)
           check(got[i].x == want[i][0] && got[i].y == want[i][1] && got[i].z == want[i][2],
                 "triple values");
       }},
      {"exceptional sequence and mutations",
       [&] {
         const std::vector<std::pair<long long, long long>> first{
             {2, -1}, {5, -2}, {13, -5}, {34, -13}, {89, -34}, {233, -89}};
         const auto seq = exceptional_sequence(1, 6);
         for (std::size_t i = 0; i < first.size(); ++i)
           check(seq[i].rank == first[i].first && seq[i].c1 == first[i].second,
                 "first six (rank, c1)");
         for (long long n = -2; n <= 10; ++n)
           check(verify_mutation_triple(n).pass, "mutation triple");
       }},
      {"plane moduli dimensions, rank 2",
       [&] {
         const auto p2 = SurfaceModel::p2();
         for (long long k = 2; k <= 30; ++k) {
           check(moduli_dim(2, p2.divisor({-1}), k) == 4 * (k - 1), "dim(2,-1,k)");
           check(moduli_dim(2, p2.divisor({-5}), k) == 4 * (k - 7), "dim(2,-5,k)");
         }
       }},
      {"dimension split on the 8-point blowup",
       [&] {
         const auto x8 = SurfaceModel::blown_plane(8);
         const auto K = x8.canonical_class();
         for (long long k = 2; k <= 30; ++k) {
           check(sym2_h1(3, K, k) == 5 * k - 7, "sym2");
           check(lam2_h1(3, K, k) == k - 3, "lam2");
           check(moduli_dim(3, K, k) == 6 * k - 10, "moduli dim");
         }
       }},
      {"coupled system has the unique solution",
       [&] {
         const auto sols = search_sys(1, 8, 3, 12, false);
         check(sols.size() == 1, "solution count");
         check(sols[0].m == 8 && sols[0].r == 3 && sols[0].A == 1 && sols[0].a == -3,
               "solution values");
         for (const Int& v : sols[0].b) check(v == 1, "b coordinates");
       }},
      {"quadric parity excludes the square condition",
       [&] {
         SearchWindow w;
         w.r_min = 1;
         w.r_max = 20;
         w.coord_ranges = {{-20, 20}, {-20, 20}};
         check(search_condition_c(SurfaceModel::quadric(), w).empty(), "quadric hits");
       }},
      {"feasibility interval endpoints",
       [&] {
         const auto rep = interval_argument(3, 1);
         check(rep.left == 8 && rep.right == Rat(25) / 3, "I(3,1) endpoints");
         check(rep.integer_ms == std::vector<int>{8}, "I(3,1) integer content");
         for (long long A = 1; A <= 5; ++A)
           check(!interval_argument(4, A).contains_integer, "I(4,A) empty");
       }},
      {"reference coefficient table",
       [&] {
         const auto& z1 = known_z_series(1);
         check(z1.coefficients.size() == 5, "Z_1 size");
         check(z1.coefficients.back().power == 7 &&
                   z1.coefficients.back().coefficient == 15650066,
               "Z_1 top coefficient");
         const auto& z0 = known_z_series(0);
         check(z0.coefficients.size() == 2, "Z_0 size");
       }},
  };

  for (const Check& c : checks) {
    c.fn();  // throws InternalError (exit 3) on failure
    out << "ok: " << c.name << "\n";
  }
  out << "selftest passed (" << checks.size() << " checks)\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for Casimir coefficients, beta-function enumeration, "
               "Markov-type mutation sequences and del Pezzo moduli dimensions"};
  app.require_subcommand(1);

  bool as_json = false;
  bool as_tsv = false;
  const auto add_format_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "machine-readable JSON output");
    sub->add_flag("--tsv", as_tsv, "tab-separated output, header row first");
  };
  const auto format = [&]() -> Format {
    require(!(as_json && as_tsv), "choose at most one of --json and --tsv");
    return as_json ? Format::json : as_tsv ? Format::tsv : Format::human;
  };

  // casimir
  CasimirArgs ca;
  auto* sub_casimir = app.add_subcommand(
      "casimir", "Casimir coefficient and dimension of an irreducible representation");
  sub_casimir->add_option("--rank", ca.rank, "algebra rank r of su(r)")->required();
  sub_casimir->add_option("--hw", ca.hw_text,
                          "fundamental-weight coefficients, e.g. 1,0,1 (length r-1)");
  sub_casimir->add_option("--rep", ca.rep_text,
                          "named representation: can, can*, ext:k, sym:k, sym*:k, ad");
  sub_casimir->add_flag("--oracle", ca.oracle,
                        "also compute c2 from the full weight system (trace route)");
  sub_casimir->add_flag("--weights", ca.weights, "list all weights with multiplicities");
  auto* cap_opt = sub_casimir->add_option(
      "--mult-cap", ca.mult_cap,
      "dimension cap for weight-system expansion (default 10000, env SDUAL_MULT_CAP)");
  add_format_flags(sub_casimir);
  sub_casimir->callback([&] {
    ca.mult_cap_given = cap_opt->count() > 0;
    run_casimir(ca, format(), out);
  });

  // beta-enum
  long long be_rank = 0;
  bool be_fold = false;
  auto* sub_beta = app.add_subcommand(
      "beta-enum", "enumerate matter configurations with nonpositive beta function");
  sub_beta->add_option("--rank", be_rank, "algebra rank r of su(r)")->required();
  sub_beta->add_flag("--fold-duals", be_fold, "identify dual-conjugate configurations");
  add_format_flags(sub_beta);
  sub_beta->callback([&] { run_beta_enum(be_rank, be_fold, format(), out); });

  // markov
  std::string mk_max, mk_mutate;
  long long mk_slot = -1;
  auto* sub_markov =
      app.add_subcommand("markov", "Markov triples: enumeration and single mutations");
  sub_markov->add_option("--max", mk_max, "list all triples with max coordinate <= this");
  sub_markov->add_option("--mutate", mk_mutate, "triple x,y,z to mutate");
  auto* slot_opt = sub_markov->add_option("--slot", mk_slot, "coordinate to mutate: 0, 1 or 2");
  add_format_flags(sub_markov);
  sub_markov->callback([&] {
    run_markov(mk_max, mk_mutate, mk_slot, slot_opt->count() > 0, format(), out);
  });

  // exceptional
  long long ex_from = 1, ex_to = 6;
  bool ex_check = false;
  auto* sub_exc = app.add_subcommand(
      "exceptional", "recurrence-generated (rank, c1, c2) rows of exceptional bundles");
  sub_exc->add_option("--from", ex_from, "first index n (default 1)");
  sub_exc->add_option("--to", ex_to, "last index n (default 6)");
  sub_exc->add_flag("--check-mutations", ex_check,
                    "verify the three-term mutation identities around each n");
  add_format_flags(sub_exc);
  sub_exc->callback([&] { run_exceptional(ex_from, ex_to, ex_check, format(), out); });

  // moduli-dim
  std::string md_surface, md_c1;
  long long md_m = 0, md_rank = 0, md_k = 0;
  auto* sub_md = app.add_subcommand(
      "moduli-dim", "moduli-space dimension report for (surface, r, c1, k)");
  sub_md->add_option("--surface", md_surface, "p2, quadric, or xm with --m (or x1..x8)")
      ->required();
  auto* md_m_opt = sub_md->add_option("--m", md_m, "blown-up points for surface xm (1..8)");
  sub_md->add_option("--rank", md_rank, "sheaf rank r")->required();
  sub_md->add_option("--c1", md_c1, "first Chern class coordinates, comma-separated")
      ->required();
  sub_md->add_option("--k", md_k, "second Chern class c2 (lattice count k)")->required();
  add_format_flags(sub_md);
  sub_md->callback([&] {
    run_moduli_dim(md_surface, md_m, md_m_opt->count() > 0, md_rank, md_c1, md_k, format(),
                   out);
  });

  // search-b
  std::string sb_surface, sb_condition = "b", sb_bounds;
  long long sb_m = 0, sb_rmin = 2, sb_rmax = 2, sb_c1bound = 0;
  auto* sub_sb = app.add_subcommand(
      "search-b", "scan lattice points for a dimension condition over a rank range");
  sub_sb->add_option("--surface", sb_surface, "p2, quadric, or xm with --m (or x1..x8)")
      ->required();
  auto* sb_m_opt = sub_sb->add_option("--m", sb_m, "blown-up points for surface xm (1..8)");
  sub_sb->add_option("--condition", sb_condition, "dimension condition: b (default) or c");
  sub_sb->add_option("--r-min", sb_rmin, "lowest rank (default 2)");
  sub_sb->add_option("--r-max", sb_rmax, "highest rank (default 2)");
  sub_sb->add_option("--coord-bounds", sb_bounds, "per-coordinate ranges lo:hi,lo:hi,...");
  auto* sb_cb_opt = sub_sb->add_option("--c1-bound", sb_c1bound,
                                       "symmetric bound B: every coordinate in [-B, B]");
  add_format_flags(sub_sb);
  sub_sb->callback([&] {
    run_search_b(sb_surface, sb_m, sb_m_opt->count() > 0, sb_condition, sb_rmin, sb_rmax,
                 sb_bounds, sb_c1bound, sb_cb_opt->count() > 0, format(), out);
  });

  // search-sys
  long long ss_mmin = 1, ss_mmax = 8, ss_rmin = 3, ss_rmax = 12;
  bool ss_prune = false;
  auto* sub_ss = app.add_subcommand(
      "search-sys", "exhaustive solve of the coupled sum / sum-of-squares system");
  sub_ss->add_option("--m-min", ss_mmin, "lowest blown-point count (default 1)");
  sub_ss->add_option("--m-max", ss_mmax, "highest blown-point count (default 8)");
  sub_ss->add_option("--r-min", ss_rmin, "lowest rank (default 3)");
  sub_ss->add_option("--r-max", ss_rmax, "highest rank (default 12)");
  sub_ss->add_flag("--interval-pruning", ss_prune,
                   "skip (m, r, A) cells whose feasibility interval misses m");
  add_format_flags(sub_ss);
  sub_ss->callback(
      [&] { run_search_sys(ss_mmin, ss_mmax, ss_rmin, ss_rmax, ss_prune, format(), out); });

  // interval
  long long iv_r = 0, iv_A = 0;
  auto* sub_iv = app.add_subcommand(
      "interval", "feasibility interval I(r, A) and the integers it contains");
  sub_iv->add_option("--r", iv_r, "rank r >= 3")->required();
  sub_iv->add_option("--A", iv_A, "degree parameter A >= 1")->required();
  add_format_flags(sub_iv);
  sub_iv->callback([&] { run_interval(iv_r, iv_A, format(), out); });

  // known-z
  long long kz_series = 0;
  auto* sub_kz = app.add_subcommand(
      "known-z", "bundled reference table of known partition-series coefficients");
  auto* kz_opt = sub_kz->add_option("--series", kz_series, "restrict to one series index");
  add_format_flags(sub_kz);
  sub_kz->callback([&] { run_known_z(kz_series, kz_opt->count() > 0, format(), out); });

  // selftest
  auto* sub_st = app.add_subcommand("selftest", "fast end-to-end consistency checks");
  sub_st->callback([&] { run_selftest(out); });

  try {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("sdual");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace sdual
