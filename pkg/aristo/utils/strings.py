import re


__all__ = ['tokenize_camel_case']


RES_TOKENIZE_WORDS_BOUNDARY = [
    re.compile(r'([a-z])([A-Z])'),
    re.compile(r'([A-Z])([A-Z][a-z])'),
]


def tokenize_camel_case(name: str, separator: str = '-') -> str:
    """
    Covert a camel case name to a separated lower case token

    >>> tokenize_camel_case('abc')
    'abc'
    >>> tokenize_camel_case('AsWritten')
    'as-written'
    >>> tokenize_camel_case('LocalConnectivity', separator='_')
    'local_connectivity'
    >>> tokenize_camel_case('NotASheaf', separator='_')
    'not_a_sheaf'
    """
    for re_tokenize_words_boundary in RES_TOKENIZE_WORDS_BOUNDARY:
        name = re_tokenize_words_boundary.sub(rf'\1{separator}\2', name)
    name = name.lower()

    return name
