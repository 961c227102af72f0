#include "chordsieve/audit.hpp"

#include "gtest/gtest.h"

namespace chordsieve {
namespace {

const LemmaCheck* Find(const AuditReport& r, const std::string& lemma, int n) {
  for (const LemmaCheck& c : r.checks) {
    if (c.lemma == lemma && c.n == n) return &c;
  }
  return nullptr;
}

TEST(Audit, AllPassUpToSix) {
  const AuditReport r = lemma_audit(6);
  EXPECT_TRUE(r.all_passed()) << to_text(r);
  const LemmaCheck* t = Find(r, "|T_k|", 6);
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->detail, "T3=660/660 T4=264/264 T5=60/60 T6=6/6");
  const LemmaCheck* f = Find(r, "|F cap R_k|", 6);
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->detail, "R1=4/4 R2=4/4 |F|=8/8");
}

TEST(Audit, PeriodsAtFour) {
  const AuditReport r = lemma_audit(4);
  const LemmaCheck* d = Find(r, "d(tau)", 4);
  ASSERT_NE(d, nullptr);
  EXPECT_TRUE(d->passed);
  EXPECT_EQ(d->detail, "periods {4,8} allowed {4,8}");
}

TEST(Audit, UniqueSymmetricAtThree) {
  const AuditReport r = lemma_audit(3);
  const LemmaCheck* f = Find(r, "|F cap R_k|", 3);
  ASSERT_NE(f, nullptr);
  EXPECT_TRUE(f->passed);
  EXPECT_NE(f->detail.find("unique (1,4)(2,5)(3,6)"), std::string::npos);
  EXPECT_NE(to_text(r).find("PASS  n=3  |F cap R_k|"), std::string::npos);
}

TEST(Audit, RejectsSmallBound) { EXPECT_THROW(lemma_audit(2), std::exception); }

}  // namespace
}  // namespace chordsieve
