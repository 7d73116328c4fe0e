// Real-field protocol flows: two-party and conference key agreement,
// proof of knowledge, mutual authentication, encryption, interactive
// signatures, group secrets and the on-behalf-of-group fingerprint,
// plus the precision planner.
//
// Every flow is a deterministic function of its seeds and parameters;
// party state is plain values, safe to move across threads.
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chebcrypt/bigreal.hpp"
#include "chebcrypt/chebyshev.hpp"
#include "chebcrypt/rng.hpp"
#include "chebcrypt/sha256.hpp"

namespace chebcrypt {

struct PublicParams {
    Real x;  // common point, |x| <= 0.99
    Real y;  // T_s(x) for the owner's secret s
    long precision_digits = 0;  // D
    long agree_digits = 0;      // N: required equal digits of the secret
    long max_index_digits = 0;  // bound on peer index size
};

struct SecretKey {
    Degree s;
    long digit_count = 0;  // G: 10^(G-1) <= s < 10^G
};

struct KeyPair {
    SecretKey secret;
    PublicParams pub;
};

struct SessionKey {
    Real raw;
    long digits_used = 0;
    Digest key_bytes{};  // sha256 of render_fixed(raw, digits_used)

    std::string hex() const { return to_hex(key_bytes); }
};

struct Fingerprint {
    long equal_prefix_len = 0;
    // Digit positions (after the point, 1-based) where the two values
    // start and stop being comparable: [first difference, precision end].
    std::pair<long, long> divergence_window{0, 0};
};

// Line-oriented protocol transcript: step, sender, rendered values.
struct Transcript {
    struct Line {
        std::string step;
        std::string sender;
        std::vector<std::string> values;
    };
    std::vector<Line> lines;

    void add(std::string step, std::string sender, std::vector<std::string> values);
    std::string to_text() const;  // tab-separated fields, one line per message
};

// Rule of thumb P = N + n*G, plus a 20 digit safety margin.
long precision_plan(long agree_digits, long n_parties, long index_digit_magnitude);

// Draws a secret of exactly index_digits decimal digits and publishes
// (x, y = T_s(x)). When x is absent it is sampled uniformly from
// [-0.99, 0.99] at precision_digits.
KeyPair keygen(Rng& rng, long index_digits, long precision_digits, long agree_digits,
               long max_index_digits, const std::optional<Real>& x = std::nullopt);

Real dh_apply(const SecretKey& sk, const Real& value);  // T_s(value), matrix engine
SessionKey derive_session_key(const Real& raw, long digits);
SessionKey dh_exchange(const SecretKey& mine, const Real& peer_value, const PublicParams& params);

// Confirmation-hash comparison of the two sides' raw secrets, with one
// retry at N-5 digits when the rendered digit N straddles a rounding
// boundary. Throws KeyMismatch when the values genuinely disagree.
std::pair<SessionKey, SessionKey> confirm_session(const Real& side_a, const Real& side_b,
                                                  long agree_digits);

struct TwoPartyResult {
    SessionKey alice;
    SessionKey bob;
    long equal_digits = 0;
    Transcript transcript;
};
// Full two-party negotiation against Bob's published parameters; both
// sides evaluated with the given engine.
TwoPartyResult run_two_party(const KeyPair& alice, const KeyPair& bob, Engine engine = Engine::matrix);

// --- three-party conference keys (round robin) ---

class ConferenceParty {
public:
    ConferenceParty(SecretKey secret, Real x, long agree_digits);

    Real round1() const;                         // T_s(x)
    Real round2(const Real& peer_round1) const;  // own secret applied to the next party's value
    SessionKey final_key(const Real& cross_value) const;

private:
    SecretKey secret_;
    Real x_;
    long agree_digits_;
};

struct ConferenceResult {
    std::array<SessionKey, 3> keys;
    Transcript transcript;
};
// Runs the three-party round robin in process; throws KeyMismatch when
// the digests cannot be brought to agreement.
ConferenceResult run_conference(const std::array<SecretKey, 3>& secrets, const Real& x,
                                long agree_digits);

// --- proof of knowledge of the secret parameter ---

struct PokChallenge {
    SecretKey r;     // kept by the challenger
    Real challenge;  // T_r(x), sent out
};
PokChallenge pok_challenge(Rng& rng, const PublicParams& params);
Real pok_respond(const SecretKey& s, const Real& challenge);
bool pok_verify(const SecretKey& r, const Real& response, const PublicParams& params);

// --- mutual authentication via the product of two directional secrets ---

struct MutualAuthResult {
    SessionKey alice;
    SessionKey bob;
    Transcript transcript;
};
MutualAuthResult mutual_auth_product(const KeyPair& alice, const KeyPair& bob, Rng& rng_alice,
                                     Rng& rng_bob);

// --- public-key encryption (El Gamal over R) ---

struct ElGamalCiphertext {
    Real q;  // N * T_r(y)
    Real r;  // T_r(x)
};
ElGamalCiphertext elgamal_encrypt(const PublicParams& pub, const mpz_class& message, Rng& rng);
mpz_class elgamal_decrypt(const SecretKey& sk, const ElGamalCiphertext& ct);

// Challenge-response strategy: Bob encrypts a fresh 128-bit nonce to
// Alice's parameters; authentication succeeds when she returns it.
bool elgamal_challenge_response(const KeyPair& alice, Rng& rng_bob);

// --- interactive signature ---

struct SigRequest {
    Digest doc_digest;  // hash(N), sent
    Real commitment;    // T_r(x), sent
    SecretKey r;        // kept by the requester
};
SigRequest sig_request(std::span<const uint8_t> document, Rng& rng, const PublicParams& pub);
// Returns the signature digest, or nullopt when no document in the
// responder's store hashes to doc_digest.
std::optional<Digest> sig_respond(const std::vector<std::vector<uint8_t>>& document_store,
                                  const Digest& doc_digest, const Real& commitment,
                                  const SecretKey& s, const PublicParams& pub);
bool sig_verify(const Digest& signature, std::span<const uint8_t> document, const SecretKey& r,
                const PublicParams& pub);
// Request/respond/verify round with one fresh-r retry.
bool run_signature_protocol(std::span<const uint8_t> document,
                            const std::vector<std::vector<uint8_t>>& responder_store,
                            const KeyPair& responder, Rng& rng);

// --- group secrets (all members must cooperate) ---

struct GroupIssue {
    std::vector<SecretKey> members;
    PublicParams pub;  // y = T_{prod s_i}(x)
    Degree combined;
};
GroupIssue group_issue(const Real& x, long member_count, long index_digits, long agree_digits,
                       Rng& rng);
// Applies the member secrets consecutively, in the order given.
Real group_apply_chain(const Real& value, const std::vector<SecretKey>& members);

// --- secret on behalf of a group (identifiable actor) ---

struct BehalfMember {
    SecretKey own;    // s_i
    Degree cofactor;  // s'_i = prod of the other members' secrets
};
struct BehalfIssue {
    std::vector<BehalfMember> members;
    PublicParams pub;  // y = T_{s_i * s'_i}(x), identical for every i
    Degree combined;
};
BehalfIssue behalf_issue(const Real& x, long member_count, long index_digits, long agree_digits,
                         Rng& rng);
// SECRET = T_{s_i}(T_{s'_i}(alice_value)); both stages applied here.
Real behalf_secret(const BehalfMember& member, const Real& alice_value);

// Shared-prefix length and the digit window in which two renderings of
// the same nominal secret diverge (the rounding fingerprint).
Fingerprint fingerprint(const Real& a, const Real& b, long digits);

}  // namespace chebcrypt
