from dataclasses import dataclass

import pytest

from astkit.exceptions import HlscSyntaxError, UnsupportedConstruct
from astkit.hlsc import AstNode, NodeKind, SourceFile, parse, parse_text
from tests.support.paths import ROM_SOURCE, corpus_files


def _kinds(node: AstNode) -> list[NodeKind]:
    return [n.kind for n in node.walk()]


def test_rom_rdy_structure():
    tree = parse(SourceFile.from_path(ROM_SOURCE))
    assert tree.kind is NodeKind.TRANSLATION_UNIT
    functions = [c for c in tree.children if c.kind is NodeKind.FUNCTION_DEF]
    assert [f.name for f in functions] == ['top_module']
    top = functions[0]
    params = top.child_of_kind(NodeKind.PARAM_LIST)
    assert params is not None
    assert [p.type_text for p in params.children] == ['ap_uint<11>', 'ap_uint<8>&', 'bool', 'bool&']
    assert [p.name for p in params.children] == ['v_addr', 'v_data', 'v_en', 'v_rdy']
    body = top.child_of_kind(NodeKind.COMPOUND_STMT)
    assert body is not None
    pragmas = [c for c in body.children if c.kind is NodeKind.PRAGMA]
    assert [p.name for p in pragmas] == ['HLS PIPELINE II=1']
    assert _kinds(top).count(NodeKind.ASSIGNMENT) == 2
    assert _kinds(top).count(NodeKind.IF_STMT) == 1
    includes = [c.name for c in tree.children if c.kind is NodeKind.INCLUDE]
    assert includes == ['<ap_int.h>', '<hls_stream.h>']


def test_rom_declaration_keeps_qualifiers_and_dims():
    tree = parse(SourceFile.from_path(ROM_SOURCE))
    declaration = next(n for n in tree.walk() if n.kind is NodeKind.DECLARATION)
    assert declaration.name == 'rom'
    assert declaration.type_text == 'static const ap_uint<8>'
    type_name = declaration.child_of_kind(NodeKind.TYPE_NAME)
    assert type_name is not None
    assert [d.name for d in type_name.children] == ['2048']
    initializer = declaration.children[-1]
    assert initializer.kind is NodeKind.LITERAL
    assert initializer.name == '{}'


@dataclass
class ParseCase:
    name: str
    text: str
    kinds: list[NodeKind]


@pytest.mark.parametrize(
    'case',
    [
        ParseCase(name='empty_file', text='', kinds=[NodeKind.TRANSLATION_UNIT]),
        ParseCase(
            name='minimal_function',
            text='void f() {}',
            kinds=[
                NodeKind.TRANSLATION_UNIT,
                NodeKind.FUNCTION_DEF,
                NodeKind.TYPE_NAME,
                NodeKind.PARAM_LIST,
                NodeKind.COMPOUND_STMT,
            ],
        ),
        ParseCase(
            name='for_loop_has_four_children',
            text='void f() { for (;;) x++; }',
            kinds=[
                NodeKind.TRANSLATION_UNIT,
                NodeKind.FUNCTION_DEF,
                NodeKind.TYPE_NAME,
                NodeKind.PARAM_LIST,
                NodeKind.COMPOUND_STMT,
                NodeKind.FOR_STMT,
                NodeKind.EXPR_STMT,
                NodeKind.EXPR_STMT,
                NodeKind.EXPR_STMT,
                NodeKind.EXPR_STMT,
                NodeKind.UNARY_EXPR,
                NodeKind.IDENTIFIER,
            ],
        ),
    ],
    ids=lambda c: c.name,
)
def test_parse_shapes(case: ParseCase):
    assert _kinds(parse_text(case.text)) == case.kinds


def test_void_parameter_list_is_empty():
    tree = parse_text('int f(void) { return 1; }')
    params = tree.children[0].child_of_kind(NodeKind.PARAM_LIST)
    assert params is not None
    assert params.children == ()


def test_expression_precedence_and_text():
    tree = parse_text('void f() { y = a + b * c - (d << 2); }')
    assignment = next(n for n in tree.walk() if n.kind is NodeKind.ASSIGNMENT)
    assert assignment.text == 'y = a + b * c - (d << 2)'
    value = assignment.children[1]
    assert value.op == '-'
    left, right = value.children
    assert left.op == '+'
    assert left.children[1].op == '*'
    assert right.parenthesized


def test_assignment_is_right_associative():
    tree = parse_text('void f() { a = b += 1; }')
    outer = next(n for n in tree.walk() if n.kind is NodeKind.ASSIGNMENT)
    assert outer.op == '='
    assert outer.children[1].kind is NodeKind.ASSIGNMENT
    assert outer.children[1].op == '+='


def test_member_call_and_scoped_names():
    tree = parse_text('void f(hls::stream<ap_uint<8> >& in) { x = in.read(); y = hls::min(a, b); }')
    param = next(n for n in tree.walk() if n.kind is NodeKind.PARAM)
    assert param.type_text == 'hls::stream<ap_uint<8> >&'
    calls = [n for n in tree.walk() if n.kind is NodeKind.CALL_EXPR]
    assert [c.children[0].name for c in calls] == ['in.read', 'hls::min']
    assert calls[1].text == 'hls::min(a, b)'


def test_multiple_declarators_become_separate_declarations():
    tree = parse_text('void f() { int x = 0, y[4]; }')
    declarations = [n for n in tree.walk() if n.kind is NodeKind.DECLARATION]
    assert [(d.name, d.type_text) for d in declarations] == [('x', 'int'), ('y', 'int')]


def test_switch_clauses_and_labels():
    tree = parse_text('void f() { switch (s) { case 0: x = 1; break; case A + 1: break; default: y = 2; } }')
    switch = next(n for n in tree.walk() if n.kind is NodeKind.SWITCH_STMT)
    clauses = [c for c in switch.children if c.kind is NodeKind.CASE_CLAUSE]
    assert [c.name for c in clauses] == ['0', 'A + 1', None]
    assert [c.kind for c in clauses[0].children] == [NodeKind.EXPR_STMT, NodeKind.BREAK_STMT]


def test_else_binds_to_nearest_if():
    tree = parse_text('void f() { if (a) if (b) x = 1; else x = 2; }')
    outer = next(n for n in tree.walk() if n.kind is NodeKind.IF_STMT)
    assert len(outer.children) == 2
    inner = outer.children[1]
    assert inner.kind is NodeKind.IF_STMT
    assert len(inner.children) == 3


def test_node_ids_are_unique_and_preorder():
    tree = parse_text('int g(int a) { if (a > 0) { return a; } return -a; }')
    ids = [n.node_id for n in tree.walk()]
    assert ids == list(range(len(ids)))


def test_spans_nest():
    tree = parse(SourceFile.from_path(ROM_SOURCE))
    for node in tree.walk():
        for child in node.children:
            assert node.span.contains(child.span), (node.kind, child.kind)


@pytest.mark.parametrize('path', corpus_files(), ids=lambda p: p.stem)
def test_corpus_parses_with_top_module(path):
    tree = parse(SourceFile.from_path(path))
    names = [c.name for c in tree.children if c.kind is NodeKind.FUNCTION_DEF]
    assert 'top_module' in names


def test_corpus_is_large_enough():
    assert len(corpus_files()) >= 20


@dataclass
class RejectCase:
    name: str
    text: str
    construct: str


@pytest.mark.parametrize(
    'case',
    [
        RejectCase(name='struct', text='struct S { int a; };', construct='struct'),
        RejectCase(name='goto', text='void f() { goto end; }', construct='goto'),
        RejectCase(name='define', text='#define N 4\n', construct='#define'),
        RejectCase(name='prototype', text='void f(int a);', construct='function prototype'),
        RejectCase(name='unsized_array', text='void f(int a[]) {}', construct='unsized array'),
        RejectCase(name='cast', text='void f() { x = (int)y; }', construct='cast'),
        RejectCase(name='label', text='void f() { end: x = 1; }', construct='label'),
        RejectCase(name='do_while', text='void f() { do { x++; } while (x); }', construct='do'),
        RejectCase(
            name='templated_cast',
            text='void f() { y = ap_uint<8>(x); }',
            construct='functional cast or template call',
        ),
        RejectCase(
            name='templated_call',
            text='void f() { y = convert<int>(x) + 1; }',
            construct='functional cast or template call',
        ),
        RejectCase(
            name='scoped_template_call',
            text='void f() { y = hls::min<int>(a, b); }',
            construct='functional cast or template call',
        ),
        RejectCase(name='builtin_functional_cast', text='void f() { y = int(x); }', construct='functional cast'),
        RejectCase(
            name='include_as_loop_body',
            text='void f() { for (;;)\n#include "a.h"\n x++; }',
            construct='directive outside a block',
        ),
    ],
    ids=lambda c: c.name,
)
def test_unsupported_constructs(case: RejectCase):
    with pytest.raises(UnsupportedConstruct) as info:
        parse_text(case.text)
    assert info.value.construct == case.construct
    assert info.value.span is not None


def test_syntax_error_reports_expected_tokens():
    with pytest.raises(HlscSyntaxError) as info:
        parse_text('void f() { x = 1 }')
    assert ';' in info.value.expected
    assert info.value.found == '}'
    assert info.value.span is not None
    assert info.value.span.start_line == 1


@dataclass
class ComparisonCase:
    name: str
    text: str
    ops: list[str]


@pytest.mark.parametrize(
    'case',
    [
        ComparisonCase(name='less_than', text='void f() { y = a < b; }', ops=['<']),
        ComparisonCase(name='chained_comparison', text='void f() { y = a < b > c; }', ops=['>', '<']),
        ComparisonCase(name='nested_parens', text='void f() { y = a < (b > (c)); }', ops=['<', '>']),
        ComparisonCase(name='shift_after_less', text='void f() { y = a < b >> (c); }', ops=['<', '>>']),
        ComparisonCase(name='loop_bound', text='void f() { for (int i = 0; i < (N); i++) x++; }', ops=['<']),
    ],
    ids=lambda c: c.name,
)
def test_comparisons_are_not_template_calls(case: ComparisonCase):
    tree = parse_text(case.text)
    assert [n.op for n in tree.walk() if n.kind is NodeKind.BINARY_EXPR] == case.ops


def test_deep_parentheses_are_rejected_not_recursed():
    text = 'void f() { y = ' + '(' * 300 + 'x' + ')' * 300 + '; }'
    with pytest.raises(UnsupportedConstruct) as info:
        parse_text(text)
    assert info.value.construct.startswith('nesting deeper than')


def test_deep_statement_nesting_is_rejected():
    text = 'void f() { ' + 'if (a) ' * 300 + 'x = 1; }'
    with pytest.raises(UnsupportedConstruct, match='nesting deeper than'):
        parse_text(text)


def test_moderate_nesting_still_parses():
    text = 'void f() { y = ' + '(' * 40 + 'x' + ')' * 40 + '; ' + 'if (a) ' * 10 + 'z = -(-(-y)); }'
    tree = parse_text(text)
    assert _kinds(tree).count(NodeKind.IF_STMT) == 10


def test_pragma_before_first_case_opens_that_clause():
    tree = parse_text('void f() { switch (s) {\n#pragma HLS latency max=1\ncase 0: x = 1; break;\ncase 1: break; } }')
    switch = next(n for n in tree.walk() if n.kind is NodeKind.SWITCH_STMT)
    assert [c.kind for c in switch.children] == [NodeKind.IDENTIFIER, NodeKind.CASE_CLAUSE, NodeKind.CASE_CLAUSE]
    first = switch.children[1]
    assert [c.kind for c in first.children] == [NodeKind.PRAGMA, NodeKind.EXPR_STMT, NodeKind.BREAK_STMT]
    assert first.children[0].name == 'HLS latency max=1'
    assert first.span.contains(first.children[0].span)


def test_pragma_as_unbraced_loop_body_joins_the_statement():
    tree = parse_text('void f() {\n  for (int i = 0; i < 4; i++)\n#pragma HLS UNROLL\n    y += i;\n}')
    loop = next(n for n in tree.walk() if n.kind is NodeKind.FOR_STMT)
    body = loop.children[3]
    assert body.kind is NodeKind.COMPOUND_STMT
    assert [c.kind for c in body.children] == [NodeKind.PRAGMA, NodeKind.EXPR_STMT]
    assert body.children[0].name == 'HLS UNROLL'
