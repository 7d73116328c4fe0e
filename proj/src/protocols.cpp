#include "chebcrypt/protocols.hpp"

#include <algorithm>

namespace chebcrypt {

namespace {

constexpr long kRetryStep = 5;

std::string render_full(const Real& v, long digits) { return render_fixed(v, digits); }

}  // namespace

void Transcript::add(std::string step, std::string sender, std::vector<std::string> values) {
    lines.push_back(Line{std::move(step), std::move(sender), std::move(values)});
}

std::string Transcript::to_text() const {
    std::string out;
    for (const Line& line : lines) {
        out += line.step;
        out += '\t';
        out += line.sender;
        for (const std::string& v : line.values) {
            out += '\t';
            out += v;
        }
        out += '\n';
    }
    return out;
}

long precision_plan(long agree_digits, long n_parties, long index_digit_magnitude) {
    if (agree_digits <= 0 || n_parties <= 0 || index_digit_magnitude <= 0) {
        throw BadParams("precision_plan arguments must be positive");
    }
    return agree_digits + n_parties * index_digit_magnitude + 20;
}

KeyPair keygen(Rng& rng, long index_digits, long precision_digits, long agree_digits,
               long max_index_digits, const std::optional<Real>& x) {
    if (index_digits < 1 || index_digits > max_index_digits) {
        throw BadParams("index digit count must lie in [1, max_index_digits]");
    }
    if (agree_digits >= precision_digits) {
        throw BadParams("agree_digits must be below the working precision");
    }
    KeyPair kp;
    kp.secret.s = rng.with_digits(index_digits);
    kp.secret.digit_count = index_digits;
    kp.pub.x = x ? x->round_to(precision_digits)
                 : rng.symmetric_real("0.99", precision_digits);
    kp.pub.y = eval_matrix(kp.pub.x, kp.secret.s).value;
    kp.pub.precision_digits = precision_digits;
    kp.pub.agree_digits = agree_digits;
    kp.pub.max_index_digits = max_index_digits;
    return kp;
}

Real dh_apply(const SecretKey& sk, const Real& value) {
    return eval_matrix(value, sk.s).value;
}

SessionKey derive_session_key(const Real& raw, long digits) {
    SessionKey key;
    key.raw = raw;
    key.digits_used = digits;
    key.key_bytes = sha256(render_fixed(raw, digits));
    return key;
}

SessionKey dh_exchange(const SecretKey& mine, const Real& peer_value, const PublicParams& params) {
    return derive_session_key(dh_apply(mine, peer_value), params.agree_digits);
}

std::pair<SessionKey, SessionKey> confirm_session(const Real& side_a, const Real& side_b,
                                                  long agree_digits) {
    if (agreement_digits(side_a, side_b) < agree_digits) {
        throw KeyMismatch("sides agree on fewer than the required " +
                          std::to_string(agree_digits) + " digits");
    }
    for (long digits : {agree_digits, agree_digits - kRetryStep}) {
        SessionKey a = derive_session_key(side_a, digits);
        SessionKey b = derive_session_key(side_b, digits);
        if (a.key_bytes == b.key_bytes) {
            return {a, b};
        }
        // Truncation boundary: equal to >= N digits yet rendered apart at
        // digit N. Step down once, then give up.
    }
    throw KeyMismatch("confirmation hashes disagree after retry");
}

TwoPartyResult run_two_party(const KeyPair& alice, const KeyPair& bob, Engine engine) {
    const PublicParams& params = bob.pub;
    const long d = params.precision_digits;

    // Intermediate values are exchanged, so each is one T application of
    // the chosen engine.
    const Real alice_inter = eval(params.x, alice.secret.s, engine);
    const Real bob_inter = eval(params.x, bob.secret.s, engine);
    const Real alice_secret = eval(bob_inter, alice.secret.s, engine);
    const Real bob_secret = eval(alice_inter, bob.secret.s, engine);

    TwoPartyResult result;
    result.transcript.add("PUB", "bob", {render_full(params.x, d), render_full(params.y, d)});
    result.transcript.add("CHAL", "alice", {render_full(alice_inter, d)});
    result.transcript.add("RESP", "bob", {render_full(bob_inter, d)});
    result.equal_digits = agreement_digits(alice_secret, bob_secret);
    auto [ka, kb] = confirm_session(alice_secret, bob_secret, params.agree_digits);
    result.alice = ka;
    result.bob = kb;
    result.transcript.add("CONFIRM", "alice", {std::to_string(ka.digits_used), ka.hex()});
    result.transcript.add("CONFIRM", "bob", {std::to_string(kb.digits_used), kb.hex()});
    return result;
}

ConferenceParty::ConferenceParty(SecretKey secret, Real x, long agree_digits)
    : secret_(std::move(secret)), x_(std::move(x)), agree_digits_(agree_digits) {}

Real ConferenceParty::round1() const { return dh_apply(secret_, x_); }

Real ConferenceParty::round2(const Real& peer_round1) const {
    return dh_apply(secret_, peer_round1);
}

SessionKey ConferenceParty::final_key(const Real& cross_value) const {
    return derive_session_key(dh_apply(secret_, cross_value), agree_digits_);
}

ConferenceResult run_conference(const std::array<SecretKey, 3>& secrets, const Real& x,
                                long agree_digits) {
    const long d = x.precision_digits();
    std::array<ConferenceParty, 3> parties{ConferenceParty(secrets[0], x, agree_digits),
                                           ConferenceParty(secrets[1], x, agree_digits),
                                           ConferenceParty(secrets[2], x, agree_digits)};
    ConferenceResult result;

    // Round 1: everyone publishes T_s(x).
    std::array<Real, 3> round1;
    for (int i = 0; i < 3; ++i) {
        round1[i] = parties[i].round1();
        result.transcript.add("ROUND1", "party" + std::to_string(i),
                              {render_full(round1[i], d)});
    }
    // Round 2, round robin: party i applies its secret to party (i+1)'s
    // round-1 value; the result is exactly the value party (i+2) needs.
    std::array<Real, 3> cross;
    for (int i = 0; i < 3; ++i) {
        Real combined = parties[i].round2(round1[(i + 1) % 3]);
        cross[(i + 2) % 3] = combined;
        result.transcript.add("ROUND2", "party" + std::to_string(i),
                              {render_full(combined, d)});
    }

    std::array<Real, 3> raw;
    for (int i = 0; i < 3; ++i) {
        raw[i] = dh_apply(secrets[i], cross[i]);
    }
    const long eq01 = agreement_digits(raw[0], raw[1]);
    const long eq02 = agreement_digits(raw[0], raw[2]);
    if (std::min(eq01, eq02) < agree_digits) {
        throw KeyMismatch("conference secrets agree on fewer than the required digits");
    }
    for (long digits : {agree_digits, agree_digits - kRetryStep}) {
        std::array<SessionKey, 3> keys{derive_session_key(raw[0], digits),
                                       derive_session_key(raw[1], digits),
                                       derive_session_key(raw[2], digits)};
        if (keys[0].key_bytes == keys[1].key_bytes && keys[0].key_bytes == keys[2].key_bytes) {
            result.keys = keys;
            for (int i = 0; i < 3; ++i) {
                result.transcript.add("CONFIRM", "party" + std::to_string(i),
                                      {std::to_string(digits), keys[i].hex()});
            }
            return result;
        }
    }
    throw KeyMismatch("conference confirmation hashes disagree after retry");
}

PokChallenge pok_challenge(Rng& rng, const PublicParams& params) {
    PokChallenge out;
    out.r.digit_count = params.max_index_digits;
    out.r.s = rng.with_digits(out.r.digit_count);
    out.challenge = eval_matrix(params.x, out.r.s).value;
    return out;
}

Real pok_respond(const SecretKey& s, const Real& challenge) { return dh_apply(s, challenge); }

bool pok_verify(const SecretKey& r, const Real& response, const PublicParams& params) {
    const Real expected = dh_apply(r, params.y);
    return agreement_digits(expected, response) >= params.agree_digits;
}

MutualAuthResult mutual_auth_product(const KeyPair& alice, const KeyPair& bob, Rng& rng_alice,
                                     Rng& rng_bob) {
    const long agree = std::min(alice.pub.agree_digits, bob.pub.agree_digits);

    // Direction 1: Alice proves Bob owns his parameters.
    PokChallenge alice_chal = pok_challenge(rng_alice, bob.pub);
    const Real bob_dir1 = pok_respond(bob.secret, alice_chal.challenge);
    if (!pok_verify(alice_chal.r, bob_dir1, bob.pub)) {
        throw KeyMismatch("responder failed the first directional check");
    }
    const Real alice_dir1 = dh_apply(alice_chal.r, bob.pub.y);

    // Direction 2: Bob proves Alice owns hers.
    PokChallenge bob_chal = pok_challenge(rng_bob, alice.pub);
    const Real alice_dir2 = pok_respond(alice.secret, bob_chal.challenge);
    if (!pok_verify(bob_chal.r, alice_dir2, alice.pub)) {
        throw KeyMismatch("initiator failed the second directional check");
    }
    const Real bob_dir2 = dh_apply(bob_chal.r, alice.pub.y);

    MutualAuthResult result;
    const long d = std::max(alice.pub.precision_digits, bob.pub.precision_digits);
    result.transcript.add("CHAL", "alice", {render_full(alice_chal.challenge, d)});
    result.transcript.add("RESP", "bob", {render_full(bob_dir1, d)});
    result.transcript.add("CHAL", "bob", {render_full(bob_chal.challenge, d)});
    result.transcript.add("RESP", "alice", {render_full(alice_dir2, d)});

    auto [ka, kb] = confirm_session(alice_dir1 * alice_dir2, bob_dir1 * bob_dir2, agree);
    result.alice = ka;
    result.bob = kb;
    result.transcript.add("CONFIRM", "alice", {std::to_string(ka.digits_used), ka.hex()});
    result.transcript.add("CONFIRM", "bob", {std::to_string(kb.digits_used), kb.hex()});
    return result;
}

ElGamalCiphertext elgamal_encrypt(const PublicParams& pub, const mpz_class& message, Rng& rng) {
    if (message <= 0) {
        throw BadParams("message must be a positive integer");
    }
    if (decimal_digits(message) > pub.agree_digits - 2) {
        throw BadParams("message has more than agree_digits - 2 decimal digits");
    }
    const long d = pub.precision_digits;
    const Real threshold = real_from_decimal("1e-10", d);

    for (int attempt = 0; attempt < 64; ++attempt) {
        const mpz_class r = rng.with_digits(pub.max_index_digits);
        const Real mask = eval_matrix(pub.y, r).value;
        if (abs_r(mask) < threshold) {
            continue;  // unusable mask, redraw r
        }
        ElGamalCiphertext ct;
        ct.q = Real::from_integer(message, d) * mask;
        ct.r = eval_matrix(pub.x, r).value;
        return ct;
    }
    throw MaskTooSmall("could not draw r with |T_r(y)| >= 1e-10");
}

mpz_class elgamal_decrypt(const SecretKey& sk, const ElGamalCiphertext& ct) {
    const Real denom = dh_apply(sk, ct.r);
    const Real ratio = ct.q / denom;
    const mpz_class n = ratio.nearest_integer();
    const Real residual = abs_r(ratio - Real::from_integer(n, ratio.precision_digits()));
    if (residual > real_from_decimal("0.1", residual.precision_digits())) {
        throw DecryptOutOfTolerance("decrypted value is not near an integer");
    }
    return n;
}

bool elgamal_challenge_response(const KeyPair& alice, Rng& rng_bob) {
    // 128-bit nonce, encrypted to Alice; she must return it intact.
    mpz_class nonce;
    {
        std::vector<uint8_t> raw = rng_bob.bytes(16);
        mpz_import(nonce.get_mpz_t(), raw.size(), 1, 1, 0, 0, raw.data());
    }
    if (nonce == 0) {
        nonce = 1;
    }
    const ElGamalCiphertext ct = elgamal_encrypt(alice.pub, nonce, rng_bob);
    const mpz_class returned = elgamal_decrypt(alice.secret, ct);
    return returned == nonce;
}

SigRequest sig_request(std::span<const uint8_t> document, Rng& rng, const PublicParams& pub) {
    SigRequest req;
    req.doc_digest = sha256(document);
    req.r.digit_count = pub.max_index_digits;
    req.r.s = rng.with_digits(req.r.digit_count);
    req.commitment = eval_matrix(pub.x, req.r.s).value;
    return req;
}

namespace {

Digest signature_digest(const Real& t_value, const PublicParams& pub,
                        std::span<const uint8_t> document) {
    std::string material = render_fixed(t_value, pub.agree_digits);
    material.push_back('\x1f');
    material.append(reinterpret_cast<const char*>(document.data()), document.size());
    return sha256(material);
}

}  // namespace

std::optional<Digest> sig_respond(const std::vector<std::vector<uint8_t>>& document_store,
                                  const Digest& doc_digest, const Real& commitment,
                                  const SecretKey& s, const PublicParams& pub) {
    for (const auto& doc : document_store) {
        if (sha256(doc) == doc_digest) {
            return signature_digest(dh_apply(s, commitment), pub, doc);
        }
    }
    return std::nullopt;  // not in possession
}

bool sig_verify(const Digest& signature, std::span<const uint8_t> document, const SecretKey& r,
                const PublicParams& pub) {
    return signature_digest(dh_apply(r, pub.y), pub, document) == signature;
}

bool run_signature_protocol(std::span<const uint8_t> document,
                            const std::vector<std::vector<uint8_t>>& responder_store,
                            const KeyPair& responder, Rng& rng) {
    for (int attempt = 0; attempt < 2; ++attempt) {
        const SigRequest req = sig_request(document, rng, responder.pub);
        const auto sig = sig_respond(responder_store, req.doc_digest, req.commitment,
                                     responder.secret, responder.pub);
        if (!sig) {
            return false;
        }
        if (sig_verify(*sig, document, req.r, responder.pub)) {
            return true;
        }
        // Rendered digit N straddled a rounding boundary; retry once with
        // a fresh r.
    }
    return false;
}

GroupIssue group_issue(const Real& x, long member_count, long index_digits, long agree_digits,
                       Rng& rng) {
    if (member_count < 1) {
        throw BadParams("group needs at least one member");
    }
    GroupIssue issue;
    issue.combined = 1;
    for (long i = 0; i < member_count; ++i) {
        SecretKey sk;
        sk.s = rng.with_digits(index_digits);
        sk.digit_count = index_digits;
        issue.combined *= sk.s;
        issue.members.push_back(std::move(sk));
    }
    issue.pub.x = x;
    issue.pub.y = eval_matrix(x, issue.combined).value;
    issue.pub.precision_digits = x.precision_digits();
    issue.pub.agree_digits = agree_digits;
    issue.pub.max_index_digits = decimal_digits(issue.combined);
    return issue;
}

Real group_apply_chain(const Real& value, const std::vector<SecretKey>& members) {
    Real acc = value;
    for (const SecretKey& sk : members) {
        acc = dh_apply(sk, acc);
    }
    return acc;
}

BehalfIssue behalf_issue(const Real& x, long member_count, long index_digits, long agree_digits,
                         Rng& rng) {
    if (member_count < 2) {
        throw BadParams("on-behalf-of-group needs at least two members");
    }
    std::vector<mpz_class> secrets;
    mpz_class combined = 1;
    for (long i = 0; i < member_count; ++i) {
        secrets.push_back(rng.with_digits(index_digits));
        combined *= secrets.back();
    }
    BehalfIssue issue;
    issue.combined = combined;
    for (long i = 0; i < member_count; ++i) {
        BehalfMember m;
        m.own.s = secrets[static_cast<size_t>(i)];
        m.own.digit_count = index_digits;
        m.cofactor = combined / secrets[static_cast<size_t>(i)];
        issue.members.push_back(std::move(m));
    }
    issue.pub.x = x;
    issue.pub.y = eval_matrix(x, combined).value;
    issue.pub.precision_digits = x.precision_digits();
    issue.pub.agree_digits = agree_digits;
    issue.pub.max_index_digits = decimal_digits(combined);
    return issue;
}

Real behalf_secret(const BehalfMember& member, const Real& alice_value) {
    const Real stage1 = eval_matrix(alice_value, member.cofactor).value;
    return eval_matrix(stage1, member.own.s).value;
}

Fingerprint fingerprint(const Real& a, const Real& b, long digits) {
    Fingerprint fp;
    fp.equal_prefix_len = agreement_digits(a, b);
    const std::string ra = render_fixed(a, digits);
    const std::string rb = render_fixed(b, digits);
    long first_diff = digits;
    // Digit positions count from 1 after the decimal point; a difference
    // in sign or integer digit reports as position 0.
    const size_t point = ra.find('.');
    for (size_t i = 0; i < std::min(ra.size(), rb.size()); ++i) {
        if (ra[i] != rb[i]) {
            first_diff = (i <= point) ? 0 : static_cast<long>(i - point - 1) + 1;
            break;
        }
    }
    fp.divergence_window = {first_diff, digits};
    return fp;
}

}  // namespace chebcrypt
