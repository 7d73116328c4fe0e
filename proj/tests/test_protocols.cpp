#include <doctest.h>

#include <string>
#include <vector>

#include "chebcrypt/protocols.hpp"

using namespace chebcrypt;

namespace {

SecretKey unit_secret() { return SecretKey{1, 1}; }

KeyPair pair_with_secret(const mpz_class& s, long g, const Real& x, long agree) {
    KeyPair kp;
    kp.secret = SecretKey{s, g};
    kp.pub.x = x;
    kp.pub.y = eval_matrix(x, s).value;
    kp.pub.precision_digits = x.precision_digits();
    kp.pub.agree_digits = agree;
    kp.pub.max_index_digits = g;
    return kp;
}

// Flip one rendered digit somewhere in the agreed prefix, then reparse.
Real tamper(const Real& v, long digits) {
    std::string s = render_fixed(v, digits);
    const size_t pos = s.find('.') + 4;
    s[pos] = s[pos] == '7' ? '2' : '7';
    return real_from_decimal(s, v.precision_digits());
}

}  // namespace

TEST_SUITE_BEGIN("protocols");

TEST_CASE("precision planner") {
    CHECK(precision_plan(100, 2, 40) == 200);
    CHECK(precision_plan(117, 2, 200) == 537);
    CHECK(precision_plan(300, 3, 105) == 635);
    CHECK_THROWS_AS(precision_plan(0, 2, 40), BadParams);
}

TEST_CASE("keygen: determinism, digit count, range") {
    Rng a(9), b(9);
    const KeyPair ka = keygen(a, 40, 200, 100, 40);
    const KeyPair kb = keygen(b, 40, 200, 100, 40);
    CHECK(ka.secret.s == kb.secret.s);
    CHECK(render_fixed(ka.pub.x, 200) == render_fixed(kb.pub.x, 200));
    CHECK(render_fixed(ka.pub.y, 200) == render_fixed(kb.pub.y, 200));

    Rng c(10);
    const Real bound = real_from_decimal("1.0000000001", 50);
    for (int i = 0; i < 100; ++i) {
        const KeyPair kp = keygen(c, 30, 150, 60, 30);
        CHECK(decimal_digits(kp.secret.s) == 30);
        CHECK(abs_r(kp.pub.x) <= real_from_decimal("0.99", 150));
        CHECK(abs_r(kp.pub.y) <= bound);
    }
}

TEST_CASE("secret of 1 publishes y = x") {
    Rng rng(11);
    const Real x = rng.symmetric_real("0.99", 100);
    CHECK(dh_apply(unit_secret(), x) == x);
}

TEST_CASE("two-party exchange with planned precision") {
    Rng rng(12);
    const long d = precision_plan(100, 2, 60);
    const Real x = rng.symmetric_real("0.99", d);
    const KeyPair alice = keygen(rng, 60, d, 100, 60, x);
    const KeyPair bob = keygen(rng, 60, d, 100, 60, x);
    const TwoPartyResult res = run_two_party(alice, bob);
    CHECK(res.alice.key_bytes == res.bob.key_bytes);
    CHECK(res.equal_digits >= 150);
    CHECK(res.alice.digits_used == 100);
    CHECK(res.alice.hex().size() == 64);
}

TEST_CASE("both secrets 1 yields the common point as key") {
    Rng rng(13);
    const Real x = rng.symmetric_real("0.99", 100);
    const KeyPair alice = pair_with_secret(1, 1, x, 50);
    const KeyPair bob = pair_with_secret(1, 1, x, 50);
    const TwoPartyResult res = run_two_party(alice, bob);
    CHECK(res.alice.key_bytes == res.bob.key_bytes);
    CHECK(res.alice.raw == x);
}

TEST_CASE("violating the planner fails loudly") {
    Rng rng(14);
    const Real x = rng.symmetric_real("0.99", 300);
    const KeyPair alice = keygen(rng, 60, 300, 295, 60, x);
    const KeyPair bob = keygen(rng, 60, 300, 295, 60, x);
    CHECK_THROWS_AS(run_two_party(alice, bob), KeyMismatch);
}

TEST_CASE("replaying seeds reproduces the transcript byte for byte") {
    auto run = [] {
        Rng rng(15);
        const long d = precision_plan(80, 2, 40);
        const Real x = rng.symmetric_real("0.99", d);
        const KeyPair alice = keygen(rng, 40, d, 80, 40, x);
        const KeyPair bob = keygen(rng, 40, d, 80, 40, x);
        return run_two_party(alice, bob).transcript.to_text();
    };
    CHECK(run() == run());
}

TEST_CASE("tampered intermediate flips the exchange to failure") {
    Rng rng(16);
    const long d = precision_plan(100, 2, 40);
    const Real x = rng.symmetric_real("0.99", d);
    const KeyPair alice = keygen(rng, 40, d, 100, 40, x);
    const KeyPair bob = keygen(rng, 40, d, 100, 40, x);

    const Real alice_inter = dh_apply(alice.secret, x);
    const Real bob_inter = dh_apply(bob.secret, x);
    const Real alice_secret = dh_apply(alice.secret, tamper(bob_inter, d));
    const Real bob_secret = dh_apply(bob.secret, alice_inter);
    CHECK_THROWS_AS(confirm_session(alice_secret, bob_secret, 100), KeyMismatch);
}

TEST_CASE("conference: trivial secrets give the common point") {
    Rng rng(17);
    const Real x = rng.symmetric_real("0.99", 100);
    const ConferenceResult res =
        run_conference({unit_secret(), unit_secret(), unit_secret()}, x, 40);
    CHECK(res.keys[0].key_bytes == res.keys[1].key_bytes);
    CHECK(res.keys[0].raw == x);
}

TEST_CASE("conference with small known secrets equals the product index") {
    Rng rng(18);
    const Real x = rng.symmetric_real("0.99", 100);
    const std::array<SecretKey, 3> secrets{SecretKey{7, 1}, SecretKey{11, 2}, SecretKey{13, 2}};
    const ConferenceResult res = run_conference(secrets, x, 40);
    const Real direct = eval_matrix(x, 7 * 11 * 13).value;
    for (const SessionKey& k : res.keys) {
        CHECK(agreement_digits(k.raw, direct) >= 90);
    }
}

TEST_CASE("conference at planned precision agrees three ways") {
    const long g = 40;
    const long d = precision_plan(100, 3, g);
    Rng rng(19);
    const Real x = rng.symmetric_real("0.99", d);
    std::array<SecretKey, 3> secrets;
    for (auto& s : secrets) {
        s = SecretKey{rng.with_digits(g), g};
    }
    const ConferenceResult res = run_conference(secrets, x, 100);
    CHECK(res.keys[0].key_bytes == res.keys[1].key_bytes);
    CHECK(res.keys[0].key_bytes == res.keys[2].key_bytes);
    // the value received by each party carries the other two secrets:
    // party 0's final uses T_{s1*s2}(x)
    const Real cross0 = eval_matrix(x, Degree(secrets[1].s * secrets[2].s)).value;
    const Real final0 = dh_apply(secrets[0], cross0);
    CHECK(agreement_digits(res.keys[0].raw, final0) >= 100);
}

TEST_CASE("proof of knowledge: honest, adversarial, unit challenge") {
    Rng rng(20);
    const long d = precision_plan(80, 2, 40);
    const Real x = rng.symmetric_real("0.99", d);
    const KeyPair bob = keygen(rng, 40, d, 80, 40, x);

    PokChallenge chal = pok_challenge(rng, bob.pub);
    const Real response = pok_respond(bob.secret, chal.challenge);
    CHECK(pok_verify(chal.r, response, bob.pub));

    // an impostor with a different secret fails
    const SecretKey impostor{rng.with_digits(40), 40};
    const Real bad = pok_respond(impostor, chal.challenge);
    CHECK_FALSE(pok_verify(chal.r, bad, bob.pub));

    // r = 1: challenge is x itself and the response must equal y
    const PokChallenge unit{unit_secret(), bob.pub.x};
    const Real resp1 = pok_respond(bob.secret, unit.challenge);
    CHECK(agreement_digits(resp1, bob.pub.y) >= bob.pub.agree_digits);
    CHECK(pok_verify(unit.r, resp1, bob.pub));
}

TEST_CASE("fresh challenges never repeat") {
    Rng rng(21);
    const long d = precision_plan(80, 2, 40);
    const Real x = rng.symmetric_real("0.99", d);
    const KeyPair bob = keygen(rng, 40, d, 80, 40, x);
    const PokChallenge c1 = pok_challenge(rng, bob.pub);
    const PokChallenge c2 = pok_challenge(rng, bob.pub);
    CHECK(c1.r.s != c2.r.s);
    CHECK(c1.challenge != c2.challenge);
}

TEST_CASE("mutual authentication via the product of directional secrets") {
    Rng issue(22);
    const long d = precision_plan(80, 2, 40);
    const KeyPair alice = keygen(issue, 40, d, 80, 40);
    const KeyPair bob = keygen(issue, 40, d, 80, 40);

    Rng ra(23), rb(24);
    const MutualAuthResult res = mutual_auth_product(alice, bob, ra, rb);
    CHECK(res.alice.key_bytes == res.bob.key_bytes);

    // trivial secrets: the key comes from x * x'
    const KeyPair ua = pair_with_secret(1, 1, alice.pub.x, 60);
    const KeyPair ub = pair_with_secret(1, 1, bob.pub.x, 60);
    Rng rc(25), rd(26);
    const MutualAuthResult triv = mutual_auth_product(ua, ub, rc, rd);
    CHECK(triv.alice.key_bytes == triv.bob.key_bytes);

    // a tampered public value must break a directional check
    KeyPair forged = bob;
    forged.pub.y = tamper(forged.pub.y, d);
    Rng re(27), rf(28);
    CHECK_THROWS_AS(mutual_auth_product(alice, forged, re, rf), KeyMismatch);
}

TEST_CASE("elgamal: masking identity and round trip") {
    Rng rng(29);
    const KeyPair bob = keygen(rng, 60, 300, 100, 60);

    // sender-side identity: Q / T_r(y) returns N exactly after rounding
    const mpz_class n("123456789");
    const ElGamalCiphertext ct = elgamal_encrypt(bob.pub, n, rng);
    CHECK(elgamal_decrypt(bob.secret, ct) == n);

    const mpz_class big("98765432109876543210987654321098765432109876543210");
    CHECK(elgamal_decrypt(bob.secret, elgamal_encrypt(bob.pub, big, rng)) == big);
}

TEST_CASE("elgamal rejects out-of-contract messages") {
    Rng rng(30);
    const KeyPair bob = keygen(rng, 40, 200, 60, 40);
    mpz_class too_big;
    mpz_ui_pow_ui(too_big.get_mpz_t(), 10, 59);  // 60 digits > N-2 = 58
    CHECK_THROWS_AS(elgamal_encrypt(bob.pub, too_big, rng), BadParams);
    CHECK_THROWS_AS(elgamal_encrypt(bob.pub, 0, rng), BadParams);
    CHECK_THROWS_AS(elgamal_encrypt(bob.pub, -5, rng), BadParams);
}

TEST_CASE("elgamal decrypt flags a damaged ciphertext") {
    Rng rng(31);
    const KeyPair bob = keygen(rng, 60, 300, 100, 60);
    ElGamalCiphertext ct = elgamal_encrypt(bob.pub, mpz_class("424242"), rng);
    ct.r = tamper(ct.r, 300);
    CHECK_THROWS_AS(elgamal_decrypt(bob.secret, ct), DecryptOutOfTolerance);
}

TEST_CASE("elgamal challenge-response authenticates the secret holder") {
    Rng rng(32);
    const KeyPair alice = keygen(rng, 40, 300, 150, 40);
    Rng bob_rng(33);
    CHECK(elgamal_challenge_response(alice, bob_rng));
}

TEST_CASE("interactive signature: honest run, unit indices, adversaries") {
    Rng rng(34);
    const long d = precision_plan(80, 2, 40);
    const KeyPair signer = keygen(rng, 40, d, 80, 40);
    const std::vector<uint8_t> doc{'p', 'a', 'y', 'l', 'o', 'a', 'd'};

    CHECK(run_signature_protocol(doc, {doc}, signer, rng));

    // both indices 1: both sides hash the same rendered value
    const KeyPair unit_signer = pair_with_secret(1, 1, signer.pub.x, 80);
    const SigRequest req{sha256(std::span<const uint8_t>(doc.data(), doc.size())),
                         unit_signer.pub.x, unit_secret()};
    const auto sig = sig_respond({doc}, req.doc_digest, req.commitment, unit_signer.secret,
                                 unit_signer.pub);
    REQUIRE(sig.has_value());
    CHECK(sig_verify(*sig, std::span<const uint8_t>(doc.data(), doc.size()), req.r,
                     unit_signer.pub));

    // responder does not hold the document
    std::vector<uint8_t> altered = doc;
    altered[0] ^= 1;
    CHECK_FALSE(run_signature_protocol(doc, {altered}, signer, rng));

    // responder holds it but signs with the wrong secret
    KeyPair wrong = signer;
    wrong.secret.s += 2;
    CHECK_FALSE(run_signature_protocol(doc, {doc}, wrong, rng));
}

TEST_CASE("signature verification rejects a flipped digest byte") {
    Rng rng(35);
    const long d = precision_plan(80, 2, 40);
    const KeyPair signer = keygen(rng, 40, d, 80, 40);
    const std::vector<uint8_t> doc{'d', 'o', 'c'};
    const SigRequest req = sig_request(doc, rng, signer.pub);
    auto sig = sig_respond({doc}, req.doc_digest, req.commitment, signer.secret, signer.pub);
    REQUIRE(sig.has_value());
    (*sig)[5] ^= 0x10;
    CHECK_FALSE(sig_verify(*sig, std::span<const uint8_t>(doc.data(), doc.size()), req.r,
                           signer.pub));
}

TEST_CASE("group secret: single member reduces to plain exchange") {
    Rng rng(36);
    const long d = precision_plan(80, 2, 40);
    const Real x = rng.symmetric_real("0.99", d);
    const GroupIssue issue = group_issue(x, 1, 40, 80, rng);
    const SecretKey alice{rng.with_digits(40), 40};
    const Real request = dh_apply(alice, x);
    const Real chained = group_apply_chain(request, issue.members);
    const Real direct = dh_apply(alice, issue.pub.y);
    CHECK(agreement_digits(chained, direct) >= 80);
}

TEST_CASE("group secret: member order does not matter") {
    const long g = 30;
    const long d = precision_plan(80, 4, g);
    Rng rng(37);
    const Real x = rng.symmetric_real("0.99", d);
    const GroupIssue issue = group_issue(x, 3, g, 80, rng);
    const SecretKey alice{rng.with_digits(g), g};
    const Real request = dh_apply(alice, x);

    std::vector<SecretKey> order = issue.members;
    const Real a = group_apply_chain(request, order);
    std::swap(order[0], order[2]);
    const Real b = group_apply_chain(request, order);
    std::swap(order[0], order[1]);
    const Real c = group_apply_chain(request, order);
    CHECK(agreement_digits(a, b) >= 80);
    CHECK(agreement_digits(b, c) >= 80);

    // chain against the direct product evaluation
    const Real direct = eval_matrix(request, issue.combined).value;
    CHECK(agreement_digits(a, direct) >= 80);
}

TEST_CASE("on-behalf secrets: symmetric two-member case is identical") {
    Rng rng(38);
    const Real x = rng.symmetric_real("0.99", 200);
    // both members hold the same secret, so both composites coincide
    BehalfIssue issue = behalf_issue(x, 2, 20, 60, rng);
    issue.members[1].own = issue.members[0].own;
    issue.members[1].cofactor = issue.members[0].cofactor;
    const SecretKey alice{rng.with_digits(20), 20};
    const Real y_alice = dh_apply(alice, x);
    const Real s0 = behalf_secret(issue.members[0], y_alice);
    const Real s1 = behalf_secret(issue.members[1], y_alice);
    CHECK(s0 == s1);
}

TEST_CASE("on-behalf secrets: distinct peers leave distinct fingerprints") {
    Rng rng(39);
    const long d = 400;
    const Real x = rng.symmetric_real("0.99", d);
    const BehalfIssue issue = behalf_issue(x, 2, 50, 100, rng);
    const SecretKey alice{rng.with_digits(50), 50};
    const Real y_alice = dh_apply(alice, x);
    const Real alice_secret = dh_apply(alice, issue.pub.y);

    const Real p0 = behalf_secret(issue.members[0], y_alice);
    const Real p1 = behalf_secret(issue.members[1], y_alice);

    // all agree to the contracted length but are not byte-identical
    CHECK(agreement_digits(p0, alice_secret) >= 100);
    CHECK(agreement_digits(p1, alice_secret) >= 100);
    CHECK(render_fixed(p0, d) != render_fixed(p1, d));

    const Fingerprint fp = fingerprint(p0, p1, d);
    CHECK(fp.equal_prefix_len >= 100);
    CHECK(fp.divergence_window.first > fp.equal_prefix_len - 3);
    CHECK(fp.divergence_window.second == d);
}

TEST_CASE("fingerprint of identical values spans no window") {
    const Real v = real_from_decimal("0.125", 50);
    const Fingerprint fp = fingerprint(v, v, 50);
    CHECK(fp.equal_prefix_len == 50);
    CHECK(fp.divergence_window.first == 50);
}

TEST_CASE("transcript rendering is tab separated") {
    Transcript t;
    t.add("PUB", "bob", {"+0.50", "+0.25"});
    t.add("FAIL", "alice", {});
    CHECK(t.to_text() == "PUB\tbob\t+0.50\t+0.25\nFAIL\talice\n");
}

TEST_SUITE_END();
