function validateEmail(value) {
  return /^[^@\s]+@[^@\s]+\.[a-z]{2,}$/i.test(value);
}

function validateForm(form) {
  var ok = true;
  var fields = form.querySelectorAll("input[required]");
  for (var i = 0; i < fields.length; i++) {
    var field = fields[i];
    var valid = field.type === "email" ? validateEmail(field.value) : field.value.length > 0;
    field.classList.toggle("invalid", !valid);
    ok = ok && valid;
  }
  return ok;
}
