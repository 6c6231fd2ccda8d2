# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
from .expr_node import ExprNode
from .number import Number
from .variable import Variable
from .imaginary_unit import ImaginaryUnit
from .unary_minus import UnaryMinus
from .binary_operator import BinaryOperator
from .binary_op import BinaryOp
from .function import Function
from .function_call import FunctionCall
from .token import Token, TokenKind
from .tokenizer import tokenize
from .expression_parser import ExpressionParser, parse_expression
from .differentiation import differentiate
from . import expression_builder
