#include "cohen/surface.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "cohen/errors.hpp"

namespace cohen {

FiniteGroupModel::FiniteGroupModel(std::string name, std::vector<std::string> labels,
                                   std::vector<std::vector<int>> table,
                                   std::vector<FaceMap> faces)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      table_(std::move(table)),
      faces_(std::move(faces)) {
  const int n = order();
  if (n == 0 || static_cast<int>(table_.size()) != n)
    throw VerificationError(name_ + ": table size does not match labels");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw VerificationError(name_ + ": ragged table");
    for (int v : row)
      if (v < 0 || v >= n) throw VerificationError(name_ + ": entry out of range");
  }

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw VerificationError(name_ + ": no identity");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw VerificationError(name_ + ": not associative at (" + label(a) +
                                  ", " + label(b) + ", " + label(c) + ")");

  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
    if (inverse_[static_cast<std::size_t>(a)] < 0)
      throw VerificationError(name_ + ": " + label(a) + " has no inverse");
  }

  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const FaceMap& d = faces_[f];
    if (!d.target || static_cast<int>(d.images.size()) != n)
      throw VerificationError(name_ + ": malformed face " + std::to_string(f + 1));
    for (int v : d.images)
      if (v < 0 || v >= d.target->order())
        throw VerificationError(name_ + ": face image out of range");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (d.images[static_cast<std::size_t>(mul(a, b))] !=
            d.target->mul(d.images[static_cast<std::size_t>(a)],
                          d.images[static_cast<std::size_t>(b)]))
          throw VerificationError(name_ + ": face " + std::to_string(f + 1) +
                                  " is not a homomorphism");
  }
}

int FiniteGroupModel::element(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw PreconditionError(name_ + ": no element '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

int FiniteGroupModel::power(int a, int k) const {
  int base = k < 0 ? inverse(a) : a;
  int out = identity_;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = mul(out, base);
  return out;
}

int FiniteGroupModel::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

nlohmann::json FiniteGroupModel::to_json() const {
  nlohmann::json j;
  j["name"] = name_;
  j["elements"] = labels_;
  j["identity"] = label(identity_);
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a < order(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < order(); ++b) row.push_back(label(mul(a, b)));
    rows.push_back(row);
  }
  j["table"] = rows;
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& d : faces_) {
    nlohmann::json f;
    f["target"] = d.target->name();
    for (int a = 0; a < order(); ++a)
      f["images"][label(a)] = d.target->label(d.images[static_cast<std::size_t>(a)]);
    faces.push_back(f);
  }
  j["faces"] = faces;
  return j;
}

std::shared_ptr<const FiniteGroupModel> build_z2(const std::string& name) {
  return std::make_shared<const FiniteGroupModel>(
      name, std::vector<std::string>{"e", "g"},
      std::vector<std::vector<int>>{{0, 1}, {1, 0}});
}

std::shared_ptr<const FiniteGroupModel> build_p1_rp2() { return build_z2("P1(RP2)"); }

std::shared_ptr<const FiniteGroupModel> build_p3_s2() { return build_z2("P3(S2)"); }

namespace {

// rho^a u^b, a in {0,1}, b in Z/4, stored as 4a + b.
constexpr int q8(int a, int b) { return 4 * a + ((b % 4) + 4) % 4; }

int q8_mul(int x, int y) {
  const int a = x / 4, b = x % 4, c = y / 4, d = y % 4;
  // u^b rho^c = rho^c u^{(-1)^c b}, and rho^2 = u^2.
  int e = (c == 1 ? -b : b) + d;
  int r = a + c;
  if (r == 2) {
    r = 0;
    e += 2;
  }
  return q8(r, e);
}

}  // namespace

std::shared_ptr<const FiniteGroupModel> build_p2_rp2(FaceAssignment fa) {
  std::vector<std::string> labels{"e", "u", "u2", "u3", "r", "ru", "ru2", "ru3"};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = q8_mul(x, y);

  auto base = build_p1_rp2();
  auto face = [&](int on_rho, int on_u) {
    FaceMap d{base, {}};
    for (int x = 0; x < 8; ++x) d.images.push_back(((x / 4) * on_rho + (x % 4) * on_u) % 2);
    return d;
  };
  return std::make_shared<const FiniteGroupModel>(
      "P2(RP2)", std::move(labels), std::move(table),
      std::vector<FaceMap>{face(fa.d1_rho, fa.d1_u), face(fa.d2_rho, fa.d2_u)});
}

namespace {

void require_subgroup(const FiniteGroupModel& m, const std::vector<int>& s,
                      const char* what) {
  const std::set<int> in(s.begin(), s.end());
  if (!in.count(m.identity()))
    throw VerificationError(std::string(what) + " subset misses the identity");
  for (int a : s) {
    if (!in.count(m.inverse(a)))
      throw VerificationError(std::string(what) + " subset not closed under inverse");
    for (int b : s)
      if (!in.count(m.mul(a, b)))
        throw VerificationError(std::string(what) + " subset not closed under product");
  }
}

bool faces_agree(const FiniteGroupModel& m, int g) {
  for (int i = 2; i <= m.face_count(); ++i)
    if (m.apply_face(i, g) != m.apply_face(1, g)) return false;
  return true;
}

}  // namespace

std::vector<int> enumerate_cohen(const FiniteGroupModel& m) {
  std::vector<int> out;
  for (int g = 0; g < m.order(); ++g)
    if (faces_agree(m, g)) out.push_back(g);
  require_subgroup(m, out, "Cohen");
  return out;
}

std::vector<int> enumerate_brunnian(const FiniteGroupModel& m) {
  std::vector<int> out;
  for (int g = 0; g < m.order(); ++g) {
    bool trivial = true;
    for (int i = 1; i <= m.face_count() && trivial; ++i)
      trivial = m.apply_face(i, g) == m.face(i).target->identity();
    if (trivial) out.push_back(g);
  }
  require_subgroup(m, out, "Brunnian");
  return out;
}

bool h_element_check(const FiniteGroupModel& m, int g1, int g2) {
  return faces_agree(m, m.mul(g1, g2));
}

bool rp2_claims_hold(const FiniteGroupModel& m) {
  auto cohen = [&](const char* l) { return faces_agree(m, m.element(l)); };
  return enumerate_brunnian(m).size() == 2 && cohen("ru") && !cohen("u") &&
         !cohen("ru2");
}

std::vector<FaceAssignment> surviving_face_assignments() {
  std::vector<FaceAssignment> out;
  for (int bits = 0; bits < 16; ++bits) {
    FaceAssignment fa{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1};
    if (rp2_claims_hold(*build_p2_rp2(fa))) out.push_back(fa);
  }
  return out;
}

int symmetry_classes(const std::vector<FaceAssignment>& as) {
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> classes;
  for (const auto& a : as) {
    auto p = std::pair{a.d1_rho, a.d1_u};
    auto q = std::pair{a.d2_rho, a.d2_u};
    classes.insert(std::minmax(p, q));
  }
  return static_cast<int>(classes.size());
}

}  // namespace cohen
