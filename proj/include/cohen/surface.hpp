#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace cohen {

class FiniteGroupModel;

/// Homomorphism onto a smaller model, given by the image of every element.
struct FaceMap {
  std::shared_ptr<const FiniteGroupModel> target;
  std::vector<int> images;
};

/// Finite group given by a multiplication table over element indices
/// 0..order-1. The constructor checks the group axioms and that every face
/// map is a homomorphism, throwing VerificationError otherwise.
class FiniteGroupModel {
 public:
  FiniteGroupModel(std::string name, std::vector<std::string> labels,
                   std::vector<std::vector<int>> table, std::vector<FaceMap> faces = {});

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(labels_.size()); }
  int identity() const { return identity_; }
  const std::string& label(int g) const { return labels_[static_cast<std::size_t>(g)]; }
  /// Throws PreconditionError on an unknown label.
  int element(const std::string& label) const;

  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int power(int a, int k) const;
  int element_order(int a) const;

  int face_count() const { return static_cast<int>(faces_.size()); }
  /// One-based face index.
  const FaceMap& face(int i) const { return faces_[static_cast<std::size_t>(i - 1)]; }
  int apply_face(int i, int g) const {
    return face(i).images[static_cast<std::size_t>(g)];
  }

  nlohmann::json to_json() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<FaceMap> faces_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// Z/2 = {e, g}.
std::shared_ptr<const FiniteGroupModel> build_z2(const std::string& name);
/// P_1(RP^2) = Z/2.
std::shared_ptr<const FiniteGroupModel> build_p1_rp2();
/// P_3(S^2) = Z/2.
std::shared_ptr<const FiniteGroupModel> build_p3_s2();

/// Images in Z/2 (0 or 1) of rho and u under both faces.
struct FaceAssignment {
  int d1_rho = 0, d1_u = 1;
  int d2_rho = 1, d2_u = 0;

  friend bool operator==(const FaceAssignment&, const FaceAssignment&) = default;
};

/// Quaternion group <u, rho | rho u rho^-1 = u^-1, rho^2 = u^2> with faces to
/// P_1(RP^2). Elements are labelled e, u, u2, u3, r, ru, ru2, ru3 (r = rho).
std::shared_ptr<const FiniteGroupModel> build_p2_rp2(FaceAssignment faces = {});

/// Elements with all faces equal; elements with all faces trivial. Both are
/// checked to be subgroups (VerificationError otherwise).
std::vector<int> enumerate_cohen(const FiniteGroupModel& m);
std::vector<int> enumerate_brunnian(const FiniteGroupModel& m);

/// g1 g2 is Cohen.
bool h_element_check(const FiniteGroupModel& m, int g1, int g2);

/// The statements the RP^2 model has to reproduce: Brun of order 2, rho u
/// Cohen, u not Cohen, rho u^2 not Cohen.
bool rp2_claims_hold(const FiniteGroupModel& m);

/// Every face assignment (16 of them) that satisfies rp2_claims_hold.
std::vector<FaceAssignment> surviving_face_assignments();

/// Assignments related by swapping d_1 and d_2 share a class; returns the
/// number of classes among `as`.
int symmetry_classes(const std::vector<FaceAssignment>& as);

}  // namespace cohen
