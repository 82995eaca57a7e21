#include "epistemic/model.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>

#include "epistemic/error.hpp"
#include "epistemic/formula.hpp"

namespace epi {

std::vector<int> WorldSet::members() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Model::Model(int world_count) : world_count_(world_count) {
  if (world_count < 1 || world_count > kMaxWorlds) {
    throw ModelError("world count must be between 1 and 62");
  }
}

WorldSet Model::valuation(const std::string& atom) const {
  auto it = valuation_.find(atom);
  return it == valuation_.end() ? WorldSet() : it->second;
}

void Model::set_valuation(const std::string& atom, WorldSet worlds) {
  if (!worlds.subset_of(this->worlds())) {
    throw ModelError("valuation of '" + atom + "' mentions a world out of range");
  }
  valuation_[atom] = worlds;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

[[noreturn]] void bad_line(int line, const std::string& msg) {
  throw ModelError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Model parse_model(std::string_view text) {
  std::optional<Model> model;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto words = split_ws(line);
    if (!model) {
      int n = 0;
      if (words.size() != 2 || words[0] != "worlds" || !parse_int(words[1], n)) {
        bad_line(line_no, "expected 'worlds N'");
      }
      if (n < 1 || n > kMaxWorlds) bad_line(line_no, "world count must be between 1 and 62");
      model.emplace(n);
      continue;
    }
    if (words.empty() || words[0] != "val") bad_line(line_no, "expected 'val <atom>: <worlds>'");
    std::string_view rest = trim(line.substr(3));
    std::size_t colon = rest.find(':');
    if (colon == std::string_view::npos) bad_line(line_no, "missing ':' after atom");
    std::string atom(trim(rest.substr(0, colon)));
    if (!is_valid_atom_name(atom)) bad_line(line_no, "invalid atom name '" + atom + "'");
    if (!seen.insert(atom).second) bad_line(line_no, "duplicate val for '" + atom + "'");
    WorldSet set;
    for (auto w : split_ws(rest.substr(colon + 1))) {
      int i = 0;
      if (!parse_int(w, i)) bad_line(line_no, "bad world index '" + std::string(w) + "'");
      if (i < 0 || i >= model->world_count()) {
        bad_line(line_no, "world index " + std::to_string(i) + " out of range");
      }
      if (set.contains(i)) bad_line(line_no, "world " + std::to_string(i) + " listed twice");
      set = set.with(i);
    }
    model->set_valuation(atom, set);
  }
  if (!model) throw ModelError("missing 'worlds N' line");
  return *model;
}

std::string render_model(const Model& m) {
  std::ostringstream os;
  os << "worlds " << m.world_count() << "\n";
  for (const auto& [atom, set] : m.valuations()) {
    os << "val " << atom << ":";
    for (int w : set.members()) os << " " << w;
    os << "\n";
  }
  return os.str();
}

WorldSet parse_world_list(std::string_view text, int world_count) {
  WorldSet set;
  text = trim(text);
  if (text.empty()) return set;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = trim(text.substr(pos, comma - pos));
    int w = 0;
    if (!parse_int(item, w)) throw ModelError("bad world index '" + std::string(item) + "'");
    if (w < 0 || w >= world_count) {
      throw ModelError("world index " + std::to_string(w) + " out of range");
    }
    set = set.with(w);
    pos = comma + 1;
  }
  return set;
}

std::string render_world_list(WorldSet x) {
  std::string out;
  for (int w : x.members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(w);
  }
  return out;
}

ModelSpace::ModelSpace(std::vector<std::string> atoms, int max_worlds)
    : atoms_(std::move(atoms)), max_worlds_(max_worlds) {
  if (max_worlds < 1 || max_worlds > kMaxWorlds) {
    throw PreconditionError("max_worlds must be between 1 and 62");
  }
  for (int n = 1; n <= max_worlds_; ++n) {
    std::uint64_t bits = static_cast<std::uint64_t>(n) * atoms_.size();
    if (bits >= 63) throw ResourceLimit("model space too large to enumerate");
    offsets_.push_back(total_);
    std::uint64_t count = 1ULL << bits;
    if (total_ + count < total_) throw ResourceLimit("model space too large to enumerate");
    total_ += count;
  }
}

Model ModelSpace::at(std::uint64_t index) const {
  if (index >= total_) throw PreconditionError("model index out of range");
  int n = 1;
  while (n < max_worlds_ && offsets_[n] <= index) ++n;
  std::uint64_t code = index - offsets_[n - 1];
  Model m(n);
  std::uint64_t mask = (1ULL << n) - 1;
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    m.set_valuation(atoms_[a], WorldSet((code >> (a * n)) & mask));
  }
  return m;
}

std::vector<Model> enumerate_models(const std::vector<std::string>& atoms,
                                    int max_worlds) {
  ModelSpace space(atoms, max_worlds);
  return {space.begin(), space.end()};
}

std::vector<PointedContext> enumerate_contexts(const Model& m) {
  std::vector<PointedContext> out;
  int n = m.world_count();
  if (n > 20) throw ResourceLimit("too many worlds to enumerate contexts");
  for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
    for (int w = 0; w < n; ++w) out.push_back({w, WorldSet(x)});
  }
  return out;
}

}  // namespace epi
