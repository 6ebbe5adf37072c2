#include "stepsha/corpus.hpp"

#include "stepsha/codec.hpp"

namespace stepsha {

const char* const kSha256FirstMessageText =
    "a0263fa5 707425fb 618cd8d2 7d58f729 1eb9a964 19f88f1c 34e35071 f28d40e3\n"
    "b43e29b8 1871a949 e2e01390 aaf3823e 8d41a28e 7f22ee02 7c625999 183e603f\n";

namespace {

constexpr StandardVector kStandardVectors[] = {
    {Variant::Sha256, "", "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"},
    {Variant::Sha256, "abc", "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"},
    {Variant::Sha512, "",
     "cf83e1357eefb8bdf1542850d66d8007d620e4050b5715dc83f4a921d36ce9ce"
     "47d0d13c5d85f2b0ff8318d2877eec2f63b931bd47417a81a538327af927da3e"},
    {Variant::Sha512, "abc",
     "ddaf35a193617abacc417349ae20413112e6fa4e89a97ea20a9eeee64b55d39a"
     "2192992a274fc1a836ba3c23a3feebbd454d4423643ce80e2a9ac94fa54ca49f"},
};

VectorCorpus make_corpus() {
    VectorCorpus c;
    c.sha256_pair = CollisionPair{
        Variant::Sha256, 22,
        MessageBlock{{0xa0263fa5, 0x707425fb, 0x618cd8d2, 0x7d58f729, 0x1eb9a964, 0x19f88f1c, 0x34e35071, 0xf28d40e3,
                      0xb43e29b8, 0x1871a949, 0xe2e01390, 0xaaf3823e, 0x8d41a28e, 0x7f22ee02, 0x7c625999, 0x183e603f}},
        MessageBlock{{0xa0263fa5, 0x707425fb, 0x618cd8d2, 0x7d58f729, 0x1eb9a964, 0x19f88f1c, 0x34e35071, 0xf28d40e3,
                      0xb43e29b9, 0x1871a948, 0xdefe7410, 0xaaf5223e, 0x8d41a28e, 0x7f22ee02, 0x7c625999, 0x00000000}},
    };
    c.sha512_pair = CollisionPair{
        Variant::Sha512, 22,
        MessageBlock{{0x3ffb91948b327337, 0x95f3c893b2356b98, 0x506c68760abf51e9, 0xfab877b7eef3aaa2,
                      0x55d5b38ec34340cf, 0xdaa006ef3f677afa, 0xa5a01d9f1c67d9c8, 0x5b219ee6f447480b,
                      0x52af39ff1ecfb48e, 0x5cff9ae5d4d60a40, 0xdb6c1a412c9b4d4d, 0xaaf3823c2a004b1f,
                      0x8d41a28b0d847693, 0x7f212e01c4e96937, 0x7eeeca5c84ba3bda, 0x1acad103aa814e0e}},
        MessageBlock{{0x3ffb91948b327337, 0x95f3c893b2356b98, 0x506c68760abf51e9, 0xfab877b7eef3aaa2,
                      0x55d5b38ec34340cf, 0xdaa006ef3f677afa, 0xa5a01d9f1c67d9c8, 0x5b219ee6f447480b,
                      0x52af39ff1ecfb48f, 0x5cff9ae5d4d60a3f, 0xdb687a412d1b4d65, 0xaaf3623c2a004b07,
                      0x8d41a28b0d847693, 0x7f212e01c4e96937, 0x7eeeca5c84ba3bda, 0x0000000000000000}},
    };
    c.sha256_path = builtin_path_sha256_22();
    return c;
}

}  // namespace

std::span<const StandardVector> standard_vectors() {
    return kStandardVectors;
}

std::string digest_hex(const RegisterState& digest, Variant v) {
    const Sha2Params& p = params_for(v);
    std::string out;
    for (Word w : digest.regs) out += format_word(w, p);
    return out;
}

const VectorCorpus& builtin_corpus() {
    static const VectorCorpus corpus = make_corpus();
    return corpus;
}

}  // namespace stepsha
