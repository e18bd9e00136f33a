"""Airy machinery against frozen independent-oracle values (mpmath)."""

from fractions import Fraction

import pytest
from mpmath import mp, mpf

from besselzeros.airy import (
    AiryZeroKind,
    a_seq,
    airy_eval,
    airy_zero,
    aprime_bracket,
    load_zero_cache,
    save_zero_cache,
)
from besselzeros.lgcoeffs import Family

F = Fraction

# mpmath zeros at 50 digits, frozen
ORACLE_A = (
    "-2.3381074104597670384891972524467354406385401456724",
    "-4.0879494441309706166369887014573910602247646991085",
    "-5.5205598280955510591298555129312935737972142806175",
    "-6.7867080900717589987802463844961769660538824773935",
    "-7.9441335871208531231382805557982685321406743969722",
    "-9.0226508533409803801581908398800892565246775351561",
    "-10.040174341558085930594556737362518094042902569106",
    "-11.008524303733262893235439649590151016730825381504",
    "-11.93601556323626251700636490293058431557788623212",
    "-12.828776752865757200406729407241824477386415599573",
)
ORACLE_B = (
    "-1.1737132227091279249199799624739021045436463891757",
    "-3.2710933028363527156802282401664138063009359691003",
    "-4.830737841662015932667709339905178176966142617323",
    "-6.1698521283102512598333645205559366799655494342756",
    "-7.3767620793677637135999593304425412220915222993971",
    "-8.4919488465093880134480394928097767286050875550555",
    "-9.5381943793462388866329885451560196208390720763825",
    "-10.529913506705357924400555598453147999529577594621",
    "-11.476953551278779437923464924732819671948253814888",
    "-12.386417138582738745561901502863280948259798384686",
)
ORACLE_APRIME = (
    "-1.0187929716474710890173247833997438242182054412544",
    "-3.2481975821798365378754237707758433841536230365172",
    "-4.8200992111787356394006162604163794144626882314956",
    "-6.1633073556394865476378435330914075929744838772035",
    "-7.3721772550477701770921822711279890100201345609841",
    "-8.4884867340197221328809954157307729511296435966841",
    "-9.5354490524335474707026334270006396953882021716105",
    "-10.527660396957407281978142491422228642986546369728",
    "-11.475056633480245294937216522405638734755720848993",
    "-12.384788371845747325493339235382624100992370194785",
)

# mpmath values (Ai, Ai', Bi, Bi') at 48 digits, frozen
ORACLE_EVAL = [
    ("-3.2", "-0.417443420564151365175922382081309512526676784234",
     "0.0650311469952631513705537656843969985908340768611",
     "-0.0539057556305392836581457342613754913475904823553",
     "-0.754124553310841361051047172925372900529325523304"),
    ("-11.9", "0.0376730243393585238976644230198090529288243420719",
     "1.04062902595923361727725471422368121779115033414",
     "-0.301406091377845716624699606598085034945272109434",
     "0.123641756316786187077285796283776737308453947203"),
    ("-12.5", "-0.27627456138116024822517113829653348934777724342",
     "-0.419331330419505164406021093726278479592084804576",
     "0.117033367257392776602101509531869089693495684914",
     "-0.974516536167174072156062825781104931101375426195"),
    ("-30.0", "-0.0879681884568421628326238583238977831072677368527",
     "1.22862060263748513470412761085815007945555655315",
     "-0.22444694220056631973759392316538471717293666343",
     "-0.483694725827681492772498769316281320707033553354"),
    ("0.5", "0.231693606480833489769125254509921739618386475358",
     "-0.224910532664683893135996990328583214825029635611",
     "0.854277043103155493300048798795243180856787400505",
     "0.544572564140592301827164018217823325654528898232"),
    ("5.0", "0.000108344428136074417349865025033459804795777834797",
     "-0.00024741389086846247600023617206305060565583396538",
     "657.792044171171182441080578874443878556312406329",
     "1435.81908021798251867172123800461829826571568337"),
    ("-80.25", "0.10841421675575568072788703883789827016436845955",
     "1.38173764758898115360469110222021620518927405686",
     "-0.154204401927874275801018272333818165052640714365",
     "0.970720093409859593054033850796550602410948564925"),
]


def test_sequence_seeds_and_recursion():
    assert a_seq(1, Family.STANDARD) == F(5, 72)
    assert a_seq(2, Family.STANDARD) == F(5, 72)
    # one recursion step: a3 = (3/2) a2 + (1/2) a1^2
    assert a_seq(3, Family.STANDARD) == F(1105, 10368)
    assert a_seq(1, Family.DERIVATIVE) == F(-7, 72)
    assert a_seq(2, Family.DERIVATIVE) == F(-7, 72)
    with pytest.raises(ValueError):
        a_seq(0, Family.STANDARD)


def test_eval_at_origin():
    # 3^(-2/3) / Gamma(2/3)
    with mp.workdps(50):
        value = airy_eval(0, "ai", 0, 45)
        assert abs(value - mpf("0.355028053887817239260063186004183176397979174199")) < mpf("1e-44")


@pytest.mark.parametrize("point", ORACLE_EVAL, ids=[p[0] for p in ORACLE_EVAL])
def test_eval_against_oracle(point):
    xs, ai, aip, bi, bip = point
    with mp.workdps(55):
        x = mpf(xs)
        for which, order, ref in [("ai", 0, ai), ("ai", 1, aip), ("bi", 0, bi), ("bi", 1, bip)]:
            got = airy_eval(x, which, order, 45)
            assert abs(got - mpf(ref)) <= mpf("1e-42") * max(1, abs(mpf(ref))), (which, order)


def test_eval_argument_validation():
    with pytest.raises(ValueError):
        airy_eval(0, "ci", 0, 20)
    with pytest.raises(ValueError):
        airy_eval(0, "ai", 2, 20)
    with pytest.raises(ValueError):
        airy_eval(0, "ai", 0, 10)  # below minimum precision


@pytest.mark.parametrize("kind,oracle", [
    (AiryZeroKind.A, ORACLE_A),
    (AiryZeroKind.B, ORACLE_B),
    (AiryZeroKind.APRIME, ORACLE_APRIME),
])
def test_zeros_match_oracle(kind, oracle):
    with mp.workdps(55):
        for m, ref in enumerate(oracle, start=1):
            got = airy_zero(kind, m, 40)
            assert abs(got - mpf(ref)) < mpf("1e-12"), (kind, m)


def test_zero_residuals():
    digits = 40
    with mp.workdps(digits + 10):
        bound = mpf(10) ** (-(digits - 5))
        for m in (1, 3, 10, 40):
            assert abs(airy_eval(airy_zero(AiryZeroKind.A, m, digits), "ai", 0, digits)) < bound
            assert abs(airy_eval(airy_zero(AiryZeroKind.B, m, digits), "bi", 0, digits)) < bound
            assert abs(airy_eval(airy_zero(AiryZeroKind.APRIME, m, digits), "ai", 1, digits)) < bound


def test_first_derivative_zero_bracket():
    with mp.workdps(30):
        x1, x2 = aprime_bracket(1)
        assert x2 == 0
        assert abs(x1 - mpf("-2.3396")) < mpf("5e-4")
        got = airy_zero(AiryZeroKind.APRIME, 1, 30)
        assert x1 < got < x2


def test_derivative_zeros_inside_brackets():
    with mp.workdps(30):
        for m in range(1, 51):
            x1, x2 = aprime_bracket(m)
            got = airy_zero(AiryZeroKind.APRIME, m, 25)
            assert x1 < got < x2, m


def test_interlacing_chain():
    digits = 30
    with mp.workdps(digits + 10):
        a_prev = airy_zero(AiryZeroKind.A, 1, digits)
        for m in range(2, 51):
            a_m = airy_zero(AiryZeroKind.A, m, digits)
            ap_m = airy_zero(AiryZeroKind.APRIME, m, digits)
            t = mpf(3) / 8 * (4 * m - 1) * mp.pi
            lower = -(t ** (mpf(2) / 3)) * (1 + mpf(5) / (48 * t * t))
            assert lower < a_m < ap_m < a_prev, m
            a_prev = a_m


def test_ordering_and_sign_alternation():
    digits = 25
    with mp.workdps(digits + 10):
        zeros = [airy_zero(AiryZeroKind.A, m, digits) for m in range(1, 11)]
        assert all(zeros[i] > zeros[i + 1] for i in range(9))
        # Ai alternates sign between consecutive zeros
        for i in range(9):
            mid = (zeros[i] + zeros[i + 1]) / 2
            expected_sign = -1 if i % 2 == 0 else 1
            assert mp.sign(airy_eval(mid, "ai", 0, digits)) == expected_sign


def test_zero_index_validation():
    with pytest.raises(ValueError):
        airy_zero(AiryZeroKind.A, 0, 20)


def test_zero_cache_round_trip(tmp_path):
    path = tmp_path / "zeros.txt"
    airy_zero(AiryZeroKind.A, 1, 25)
    count = save_zero_cache(str(path))
    assert count >= 1
    loaded = load_zero_cache(str(path))
    assert loaded == count
