import pytest

from astkit.hlsc import SourceFile, parse, parse_text, pretty_print
from tests.support.paths import corpus_files
from tests.support.programs import random_program


@pytest.mark.parametrize('path', corpus_files(), ids=lambda p: p.stem)
def test_corpus_round_trips(path):
    tree = parse(SourceFile.from_path(path))
    printed = pretty_print(tree)
    assert parse_text(printed).structurally_equal(tree)


@pytest.mark.parametrize('seed', range(200))
def test_random_programs_round_trip(seed: int):
    tree = parse_text(random_program(seed))
    printed = pretty_print(tree)
    assert parse_text(printed).structurally_equal(tree)
    # printing is a fixed point after one pass
    assert pretty_print(parse_text(printed)) == printed


def test_rom_rdy_layout():
    tree = parse_text(
        '#include <ap_int.h>\n'
        'void top_module(ap_uint<11> v_addr, ap_uint<8>& v_data, bool v_en, bool& v_rdy) {\n'
        '#pragma HLS PIPELINE II=1\n'
        'v_rdy = v_en;\n'
        'if (v_en) {\n'
        'v_data = rom[v_addr];\n'
        '}}\n',
    )
    assert pretty_print(tree) == (
        '#include <ap_int.h>\n'
        'void top_module(ap_uint<11> v_addr, ap_uint<8>& v_data, bool v_en, bool& v_rdy) {\n'
        '    #pragma HLS PIPELINE II=1\n'
        '    v_rdy = v_en;\n'
        '    if (v_en) {\n'
        '        v_data = rom[v_addr];\n'
        '    }\n'
        '}\n'
    )


def test_empty_translation_unit_prints_nothing():
    assert pretty_print(parse_text('')) == ''


def test_for_header_and_else_layout():
    tree = parse_text('void f() { for (int i = 0; i < 4; i++) s = s + i; if (a) { b = 1; } else c = 2; }')
    assert pretty_print(tree) == (
        'void f() {\n'
        '    for (int i = 0; i < 4; i++) s = s + i;\n'
        '    if (a) {\n'
        '        b = 1;\n'
        '    } else c = 2;\n'
        '}\n'
    )


def test_double_negation_keeps_a_space():
    tree = parse_text('void f() { x = - -y; }')
    assert 'x = - -y;' in pretty_print(tree)
